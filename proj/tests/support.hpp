#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cprk/types.hpp"

namespace cprk::testing {

/// Fisher-Yates with raw engine outputs, so sequences are reproducible from
/// the seed alone (std::shuffle's draws are implementation-defined).
template <typename T>
void deterministic_shuffle(std::vector<T>& values, std::mt19937& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::swap(values[i - 1], values[rng() % i]);
  }
}

/// Copy of the drawing with vertex ids permuted inside each arc; arc
/// boundaries and colors stay put.
inline CircularDrawing shuffled_within_arcs(const CircularDrawing& drawing,
                                            std::mt19937& rng) {
  CircularDrawing copy = drawing;
  for (const ArcSegment& arc : copy.arcs) {
    for (std::int32_t i = arc.count; i > 1; --i) {
      std::swap(copy.order[static_cast<std::size_t>(arc.first + i - 1)],
                copy.order[static_cast<std::size_t>(arc.first) + rng() % i]);
    }
  }
  return copy;
}

/// All ways to write total as k ordered non-negative parts.
inline std::vector<std::vector<std::int64_t>> compositions(std::int64_t total,
                                                           std::int64_t k) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> parts(static_cast<std::size_t>(k), 0);
  const auto descend = [&](auto&& self, std::size_t idx, std::int64_t rest) -> void {
    if (idx + 1 == parts.size()) {
      parts[idx] = rest;
      out.push_back(parts);
      return;
    }
    for (std::int64_t v = 0; v <= rest; ++v) {
      parts[idx] = v;
      self(self, idx + 1, rest - v);
    }
  };
  descend(descend, 0, total);
  return out;
}

/// Maximal constant runs around the cycle (1 if all values agree).
inline std::int64_t cyclic_runs(const std::vector<std::int32_t>& labels) {
  const std::size_t p = labels.size();
  if (p <= 1) return static_cast<std::int64_t>(p);
  std::int64_t breaks = 0;
  for (std::size_t i = 0; i < p; ++i) {
    if (labels[i] != labels[(i + 1) % p]) ++breaks;
  }
  return breaks == 0 ? 1 : breaks;
}

struct XmlStats {
  bool well_formed = false;
  std::map<std::string, int> element_counts;
};

/// Tiny well-formedness scan: balanced tags, quoted attribute values, one
/// element count per tag name.  Enough for checking generated SVG, not a
/// general XML parser.
inline XmlStats scan_xml(const std::string& text) {
  XmlStats stats;
  std::vector<std::string> stack;
  std::size_t i = 0;
  const std::size_t size = text.size();
  bool saw_element = false;
  while (i < size) {
    if (text[i] != '<') {
      ++i;
      continue;
    }
    if (i + 1 < size && text[i + 1] == '?') {  // declaration
      const std::size_t end = text.find("?>", i);
      if (end == std::string::npos) return stats;
      i = end + 2;
      continue;
    }
    if (i + 1 < size && text[i + 1] == '/') {  // closing tag
      std::size_t j = i + 2;
      std::string name;
      while (j < size && text[j] != '>' && !std::isspace(static_cast<unsigned char>(text[j]))) {
        name += text[j++];
      }
      while (j < size && text[j] != '>') ++j;
      if (j == size || stack.empty() || stack.back() != name) return stats;
      stack.pop_back();
      i = j + 1;
      continue;
    }
    std::size_t j = i + 1;  // opening or self-closing tag
    std::string name;
    while (j < size && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                        text[j] == '_' || text[j] == '-' || text[j] == ':')) {
      name += text[j++];
    }
    if (name.empty()) return stats;
    bool in_quote = false;
    while (j < size && (in_quote || text[j] != '>')) {
      if (text[j] == '"') in_quote = !in_quote;
      ++j;
    }
    if (j == size) return stats;
    ++stats.element_counts[name];
    saw_element = true;
    if (text[j - 1] != '/') stack.push_back(name);
    i = j + 1;
  }
  stats.well_formed = stack.empty() && saw_element;
  return stats;
}

}  // namespace cprk::testing

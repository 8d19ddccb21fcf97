#include "cprk/model.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

namespace cprk {

void validate_spec(const CompleteBipartiteSpec& spec) {
  if (spec.m < 1 || spec.n < 1) {
    throw std::invalid_argument("complete bipartite spec requires m >= 1 and n >= 1");
  }
}

void validate_profile(const ArcProfile& profile) {
  if (profile.pink.size() != profile.black.size() || profile.pink.empty()) {
    throw std::invalid_argument("arc profile needs k >= 1 pink arcs and as many black arcs");
  }
  for (std::int64_t v : profile.pink) {
    if (v < 0) throw std::invalid_argument("negative pink arc occupancy");
  }
  for (std::int64_t v : profile.black) {
    if (v < 0) throw std::invalid_argument("negative black arc occupancy");
  }
}

void validate_profile(const CompleteBipartiteSpec& spec, const ArcProfile& profile) {
  validate_spec(spec);
  validate_profile(profile);
  const std::int64_t pink_sum =
      std::accumulate(profile.pink.begin(), profile.pink.end(), std::int64_t{0});
  const std::int64_t black_sum =
      std::accumulate(profile.black.begin(), profile.black.end(), std::int64_t{0});
  if (pink_sum != spec.m || black_sum != spec.n) {
    throw std::invalid_argument("arc occupancies sum to (" + std::to_string(pink_sum) + "," +
                                std::to_string(black_sum) + "), expected (" +
                                std::to_string(spec.m) + "," + std::to_string(spec.n) + ")");
  }
}

void validate_graph(const GraphSpec& graph) {
  if (graph.vertex_count < 1) throw std::invalid_argument("graph needs at least one vertex");
  std::set<std::pair<std::int32_t, std::int32_t>> seen;
  for (auto [u, v] : graph.edges) {
    if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
    if (u < 0 || v < 0 || u >= graph.vertex_count || v >= graph.vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    const std::pair<std::int32_t, std::int32_t> key{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(key.first) + "," +
                                  std::to_string(key.second) + ")");
    }
  }
  if (!graph.partition.empty() &&
      graph.partition.size() != static_cast<std::size_t>(graph.vertex_count)) {
    throw std::invalid_argument("partition must label every vertex or be empty");
  }
}

GraphSpec complete_bipartite(std::int64_t m, std::int64_t n) {
  validate_spec({m, n});
  if (m + n > std::numeric_limits<std::int32_t>::max()) {
    throw std::invalid_argument("too many vertices");
  }
  GraphSpec g;
  g.vertex_count = static_cast<std::int32_t>(m + n);
  g.edges.reserve(static_cast<std::size_t>(m * n));
  for (std::int32_t i = 0; i < m; ++i) {
    for (std::int32_t j = 0; j < n; ++j) {
      g.edges.emplace_back(i, static_cast<std::int32_t>(m + j));
    }
  }
  g.partition.assign(static_cast<std::size_t>(m + n), 1);
  std::fill_n(g.partition.begin(), m, 0);
  return g;
}

std::optional<BipartiteClasses> complete_bipartite_classes(const GraphSpec& graph) {
  validate_graph(graph);
  if (graph.partition.empty()) return std::nullopt;
  BipartiteClasses classes;
  const std::int32_t label0 = graph.partition[0];
  std::optional<std::int32_t> label1;
  for (std::int32_t v = 0; v < graph.vertex_count; ++v) {
    const std::int32_t lab = graph.partition[v];
    if (lab == label0) {
      classes.first.push_back(v);
    } else {
      if (!label1) label1 = lab;
      if (lab != *label1) return std::nullopt;  // more than two parts
      classes.second.push_back(v);
    }
  }
  if (classes.second.empty()) return std::nullopt;
  // Complete bipartite iff every edge joins the classes and all cross pairs
  // are present; with duplicates excluded the count settles it.
  if (graph.edges.size() != classes.first.size() * classes.second.size()) return std::nullopt;
  for (auto [u, v] : graph.edges) {
    if (graph.partition[u] == graph.partition[v]) return std::nullopt;
  }
  return classes;
}

CircularDrawing profile_to_drawing(const CompleteBipartiteSpec& spec, const ArcProfile& profile) {
  validate_profile(spec, profile);
  CircularDrawing d;
  d.order.reserve(static_cast<std::size_t>(spec.m + spec.n));
  d.arcs.reserve(2 * profile.arc_pairs());
  std::int32_t next_pink = 0;
  std::int32_t next_black = static_cast<std::int32_t>(spec.m);
  std::int32_t pos = 0;
  for (std::size_t i = 0; i < profile.arc_pairs(); ++i) {
    d.arcs.push_back({Color::Pink, pos, static_cast<std::int32_t>(profile.pink[i])});
    for (std::int64_t t = 0; t < profile.pink[i]; ++t) d.order.push_back({next_pink++, Color::Pink});
    pos += static_cast<std::int32_t>(profile.pink[i]);
    d.arcs.push_back({Color::Black, pos, static_cast<std::int32_t>(profile.black[i])});
    for (std::int64_t t = 0; t < profile.black[i]; ++t) d.order.push_back({next_black++, Color::Black});
    pos += static_cast<std::int32_t>(profile.black[i]);
  }
  return d;
}

namespace {

// Interleaved view (m_1, n_1, m_2, n_2, ...).
std::vector<std::int64_t> interleave(const ArcProfile& p) {
  std::vector<std::int64_t> s;
  s.reserve(2 * p.arc_pairs());
  for (std::size_t i = 0; i < p.arc_pairs(); ++i) {
    s.push_back(p.pink[i]);
    s.push_back(p.black[i]);
  }
  return s;
}

ArcProfile from_interleaved(const std::vector<std::int64_t>& s) {
  ArcProfile p;
  p.pink.reserve(s.size() / 2);
  p.black.reserve(s.size() / 2);
  for (std::size_t i = 0; i < s.size(); i += 2) {
    p.pink.push_back(s[i]);
    p.black.push_back(s[i + 1]);
  }
  return p;
}

}  // namespace

ArcProfile canonical_profile(const ArcProfile& profile) {
  const std::size_t k = profile.arc_pairs();
  if (k == 0 || profile.black.size() != k) {
    throw std::invalid_argument("arc profile needs k >= 1 pink arcs and as many black arcs");
  }
  const std::vector<std::int64_t> ident = interleave(profile);

  ArcProfile reflected;
  reflected.pink.resize(k);
  reflected.black.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    reflected.pink[i] = profile.pink[(k - i) % k];
    reflected.black[i] = profile.black[k - 1 - i];
  }
  const std::vector<std::int64_t> refl = interleave(reflected);

  std::vector<std::int64_t> best = ident;
  std::vector<std::int64_t> cand(2 * k);
  for (const auto& base : {ident, refl}) {
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t i = 0; i < 2 * k; ++i) cand[i] = base[(i + 2 * r) % (2 * k)];
      if (cand < best) best = cand;
    }
  }
  return from_interleaved(best);
}

}  // namespace cprk

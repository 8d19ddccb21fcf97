#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cprk/optimizer.hpp"

namespace cprk::tool {

/// One row of CLI output for a single (m, n, K) computation.  The witness is
/// the least canonical optimal profile.
struct OutputRecord {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t K = 0;
  std::int64_t effective_k = 0;
  std::int64_t cpr = 0;
  std::int64_t bound_num = 0;
  std::int64_t bound_den = 1;
  std::int64_t bound_ceil = 0;
  std::vector<std::int64_t> witness_pink;
  std::vector<std::int64_t> witness_black;
  bool equality = false;  ///< the bound's exact rational equals cpr
  std::int64_t ms = 0;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord make_record(const CprResult& result, std::int64_t elapsed_ms);

/// {"m":..,"n":..,"K":..,"effectiveK":..,"cpr":..,"bound":{"num","den","ceil"},
///  "witness":{"pink":[..],"black":[..]},"equality":..,"ms":..}
std::string render_json(const OutputRecord& record);
std::string render_json(const std::vector<OutputRecord>& records);
OutputRecord parse_json(const std::string& text);
std::vector<OutputRecord> parse_json_array(const std::string& text);

std::string csv_header();
std::string render_csv_row(const OutputRecord& record);
std::string render_csv(const std::vector<OutputRecord>& records);
std::vector<OutputRecord> parse_csv(const std::string& text);

std::string render_text(const OutputRecord& record);

}  // namespace cprk::tool

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cprk/oracle.hpp"
#include "record.hpp"

namespace cprk::tool {

/// cpr_exact plus wall-clock timing, packaged for serialization.
OutputRecord compute_record(std::int64_t m, std::int64_t n, std::int64_t K);

/// format is "text", "json" (object) or "csv" (header plus one row).
std::string format_single(const OutputRecord& record, const std::string& format);

/// format is "text" (aligned table), "json" (array) or "csv".
std::string format_sweep(const std::vector<OutputRecord>& records,
                         const std::string& format);

/// Records for every m <= m_max, n <= n_max, 2 <= K <= min(K_max, m+n),
/// ordered by (m, n, K).
std::vector<OutputRecord> sweep_records(std::int64_t m_max, std::int64_t n_max,
                                        std::int64_t K_max);

struct VerifyOutcome {
  std::int64_t instances = 0;
  bool ok = true;
  std::string detail;  ///< first counterexample when !ok
};

/// Cross-checks cpr_exact against the brute-force oracle and the lower bound
/// over the same grid as sweep_records; stops at the first mismatch.
VerifyOutcome verify_sweep(std::int64_t m_max, std::int64_t n_max,
                           std::int64_t K_max, const OracleConfig& config);

/// SVG of the least optimal witness for (m, n, K).
std::string draw_witness_svg(std::int64_t m, std::int64_t n, std::int64_t K);

/// Runs the brute-force search (k = 0 means no arc limit) and renders the
/// minimum plus one optimal cyclic order.
std::string describe_oracle_run(const GraphSpec& graph, std::int64_t k,
                                const OracleConfig& config);

/// Writes to the path, or to stdout when the path is empty.
void write_output(const std::string& content, const std::string& out_path);

}  // namespace cprk::tool

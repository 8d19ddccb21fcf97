#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "cprk/model.hpp"
#include "svg.hpp"

namespace cprk::tool {
namespace {

std::string profile_cell(const OutputRecord& r) {
  std::ostringstream out;
  out << "pink=(";
  for (std::size_t i = 0; i < r.witness_pink.size(); ++i) {
    out << (i ? " " : "") << r.witness_pink[i];
  }
  out << ") black=(";
  for (std::size_t i = 0; i < r.witness_black.size(); ++i) {
    out << (i ? " " : "") << r.witness_black[i];
  }
  out << ")";
  return out.str();
}

std::string bound_cell(const OutputRecord& r) {
  std::string cell = std::to_string(r.bound_num);
  if (r.bound_den != 1) cell += "/" + std::to_string(r.bound_den);
  return cell;
}

std::string text_table(const std::vector<OutputRecord>& records) {
  std::ostringstream out;
  out << std::setw(4) << "m" << std::setw(4) << "n" << std::setw(4) << "K"
      << std::setw(6) << "effK" << std::setw(8) << "cpr" << std::setw(12)
      << "bound" << std::setw(6) << "ceil" << std::setw(5) << "eq"
      << std::setw(7) << "ms" << "  witness\n";
  for (const OutputRecord& r : records) {
    out << std::setw(4) << r.m << std::setw(4) << r.n << std::setw(4) << r.K
        << std::setw(6) << r.effective_k << std::setw(8) << r.cpr
        << std::setw(12) << bound_cell(r) << std::setw(6) << r.bound_ceil
        << std::setw(5) << (r.equality ? "yes" : "no") << std::setw(7) << r.ms
        << "  " << profile_cell(r) << "\n";
  }
  return out.str();
}

void check_format(const std::string& format) {
  if (format != "text" && format != "json" && format != "csv") {
    throw std::invalid_argument("unknown format \"" + format +
                                "\" (expected text, json or csv)");
  }
}

}  // namespace

OutputRecord compute_record(std::int64_t m, std::int64_t n, std::int64_t K) {
  const auto start = std::chrono::steady_clock::now();
  const CprResult result = cpr_exact(m, n, K);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  return make_record(
      result, std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
}

std::string format_single(const OutputRecord& record, const std::string& format) {
  check_format(format);
  if (format == "json") return render_json(record) + "\n";
  if (format == "csv") return csv_header() + "\n" + render_csv_row(record) + "\n";
  return render_text(record);
}

std::string format_sweep(const std::vector<OutputRecord>& records,
                         const std::string& format) {
  check_format(format);
  if (format == "json") return render_json(records) + "\n";
  if (format == "csv") return render_csv(records);
  return text_table(records);
}

std::vector<OutputRecord> sweep_records(std::int64_t m_max, std::int64_t n_max,
                                        std::int64_t K_max) {
  if (m_max < 1 || n_max < 1 || K_max < 2) {
    throw std::invalid_argument("sweep needs m_max, n_max >= 1 and K_max >= 2");
  }
  std::vector<OutputRecord> records;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    for (std::int64_t n = 1; n <= n_max; ++n) {
      for (std::int64_t K = 2; K <= std::min(K_max, m + n); ++K) {
        records.push_back(compute_record(m, n, K));
      }
    }
  }
  return records;
}

VerifyOutcome verify_sweep(std::int64_t m_max, std::int64_t n_max,
                           std::int64_t K_max, const OracleConfig& config) {
  if (m_max < 1 || n_max < 1 || K_max < 2) {
    throw std::invalid_argument("sweep needs m_max, n_max >= 1 and K_max >= 2");
  }
  VerifyOutcome outcome;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    for (std::int64_t n = 1; n <= n_max; ++n) {
      const GraphSpec graph = complete_bipartite(m, n);
      for (std::int64_t K = 2; K <= std::min(K_max, m + n); ++K) {
        const CprResult exact = cpr_exact(m, n, K);
        const OracleResult oracle = brute_force_cpr(graph, K, config);
        ++outcome.instances;
        if (exact.value != oracle.crossings) {
          outcome.ok = false;
          std::ostringstream detail;
          detail << "counterexample at m=" << m << " n=" << n << " K=" << K
                 << ": cpr_exact=" << exact.value
                 << " but brute force found " << oracle.crossings;
          outcome.detail = detail.str();
          return outcome;
        }
        if (Rational(exact.value) < exact.lower_bound.exact) {
          outcome.ok = false;
          std::ostringstream detail;
          detail << "counterexample at m=" << m << " n=" << n << " K=" << K
                 << ": value " << exact.value << " below bound "
                 << exact.lower_bound.exact.str();
          outcome.detail = detail.str();
          return outcome;
        }
      }
    }
  }
  return outcome;
}

std::string draw_witness_svg(std::int64_t m, std::int64_t n, std::int64_t K) {
  const CprResult result = cpr_exact(m, n, K);
  return render_svg(result.spec, result.witnesses.front(), K, result.value);
}

std::string describe_oracle_run(const GraphSpec& graph, std::int64_t k,
                                const OracleConfig& config) {
  const OracleResult result =
      k == 0 ? brute_force_outerplanar(graph, config)
             : brute_force_cpr(graph, k, config);
  std::ostringstream out;
  out << result.crossings << "\norder:";
  for (const std::int32_t id : result.order) out << ' ' << id;
  out << "\n";
  return out.str();
}

void write_output(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("write to " + out_path + " failed");
}

}  // namespace cprk::tool

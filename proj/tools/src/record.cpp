#include "record.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cprk::tool {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const OutputRecord& r) {
  return ordered_json{
      {"m", r.m},
      {"n", r.n},
      {"K", r.K},
      {"effectiveK", r.effective_k},
      {"cpr", r.cpr},
      {"bound", {{"num", r.bound_num}, {"den", r.bound_den}, {"ceil", r.bound_ceil}}},
      {"witness", {{"pink", r.witness_pink}, {"black", r.witness_black}}},
      {"equality", r.equality},
      {"ms", r.ms},
  };
}

OutputRecord from_json(const ordered_json& j) {
  OutputRecord r;
  r.m = j.at("m").get<std::int64_t>();
  r.n = j.at("n").get<std::int64_t>();
  r.K = j.at("K").get<std::int64_t>();
  r.effective_k = j.at("effectiveK").get<std::int64_t>();
  r.cpr = j.at("cpr").get<std::int64_t>();
  r.bound_num = j.at("bound").at("num").get<std::int64_t>();
  r.bound_den = j.at("bound").at("den").get<std::int64_t>();
  r.bound_ceil = j.at("bound").at("ceil").get<std::int64_t>();
  r.witness_pink = j.at("witness").at("pink").get<std::vector<std::int64_t>>();
  r.witness_black = j.at("witness").at("black").get<std::vector<std::int64_t>>();
  r.equality = j.at("equality").get<bool>();
  r.ms = j.at("ms").get<std::int64_t>();
  return r;
}

std::string joined(const std::vector<std::int64_t>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<std::int64_t> split_ints(const std::string& cell, char sep) {
  std::vector<std::int64_t> values;
  std::string item;
  std::istringstream in(cell);
  while (std::getline(in, item, sep)) values.push_back(std::stoll(item));
  return values;
}

}  // namespace

OutputRecord make_record(const CprResult& result, std::int64_t elapsed_ms) {
  if (result.witnesses.empty()) {
    throw std::invalid_argument("result carries no witness profile");
  }
  OutputRecord r;
  r.m = result.spec.m;
  r.n = result.spec.n;
  r.K = result.requested_k;
  r.effective_k = result.effective_k;
  r.cpr = result.value;
  r.bound_num = result.lower_bound.exact.num();
  r.bound_den = result.lower_bound.exact.den();
  r.bound_ceil = result.lower_bound.ceiling;
  r.witness_pink = result.witnesses.front().pink;
  r.witness_black = result.witnesses.front().black;
  r.equality = Rational(result.value) == result.lower_bound.exact;
  r.ms = elapsed_ms;
  return r;
}

std::string render_json(const OutputRecord& record) {
  return to_json(record).dump(2);
}

std::string render_json(const std::vector<OutputRecord>& records) {
  ordered_json arr = ordered_json::array();
  for (const OutputRecord& r : records) arr.push_back(to_json(r));
  return arr.dump(2);
}

OutputRecord parse_json(const std::string& text) {
  return from_json(ordered_json::parse(text));
}

std::vector<OutputRecord> parse_json_array(const std::string& text) {
  const ordered_json arr = ordered_json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("expected a JSON array");
  std::vector<OutputRecord> records;
  records.reserve(arr.size());
  for (const auto& j : arr) records.push_back(from_json(j));
  return records;
}

std::string csv_header() {
  return "m,n,K,effectiveK,cpr,bound_num,bound_den,bound_ceil,"
         "witness_pink,witness_black,equality,ms";
}

std::string render_csv_row(const OutputRecord& r) {
  std::ostringstream out;
  out << r.m << ',' << r.n << ',' << r.K << ',' << r.effective_k << ',' << r.cpr
      << ',' << r.bound_num << ',' << r.bound_den << ',' << r.bound_ceil << ','
      << joined(r.witness_pink, '|') << ',' << joined(r.witness_black, '|')
      << ',' << (r.equality ? "true" : "false") << ',' << r.ms;
  return out.str();
}

std::string render_csv(const std::vector<OutputRecord>& records) {
  std::string out = csv_header() + "\n";
  for (const OutputRecord& r : records) out += render_csv_row(r) + "\n";
  return out;
}

std::vector<OutputRecord> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != csv_header()) {
    throw std::invalid_argument("bad or missing CSV header");
  }
  std::vector<OutputRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream cells_in(line);
    while (std::getline(cells_in, cell, ',')) cells.push_back(cell);
    if (cells.size() != 12) {
      throw std::invalid_argument("expected 12 CSV cells, got " +
                                  std::to_string(cells.size()));
    }
    OutputRecord r;
    r.m = std::stoll(cells[0]);
    r.n = std::stoll(cells[1]);
    r.K = std::stoll(cells[2]);
    r.effective_k = std::stoll(cells[3]);
    r.cpr = std::stoll(cells[4]);
    r.bound_num = std::stoll(cells[5]);
    r.bound_den = std::stoll(cells[6]);
    r.bound_ceil = std::stoll(cells[7]);
    r.witness_pink = split_ints(cells[8], '|');
    r.witness_black = split_ints(cells[9], '|');
    if (cells[10] != "true" && cells[10] != "false") {
      throw std::invalid_argument("equality cell must be true or false");
    }
    r.equality = cells[10] == "true";
    r.ms = std::stoll(cells[11]);
    records.push_back(std::move(r));
  }
  return records;
}

std::string render_text(const OutputRecord& r) {
  std::ostringstream out;
  out << "K_{" << r.m << "," << r.n << "}  K=" << r.K << " (effective "
      << r.effective_k << ")\n"
      << "cpr       " << r.cpr << "\n"
      << "bound     " << r.bound_num;
  if (r.bound_den != 1) out << "/" << r.bound_den;
  out << "  (ceil " << r.bound_ceil << ")  equality "
      << (r.equality ? "yes" : "no") << "\n"
      << "witness   pink=(" << joined(r.witness_pink, ' ') << ")  black=("
      << joined(r.witness_black, ' ') << ")\n"
      << "time      " << r.ms << " ms\n";
  return out.str();
}

}  // namespace cprk::tool

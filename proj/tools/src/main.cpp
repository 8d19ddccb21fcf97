#include <cstdint>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "cprk/model.hpp"
#include "graph_io.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact circular k-partite crossing numbers of complete bipartite graphs"};
  app.require_subcommand(1);

  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t K = 0;
  std::int64_t m_max = 0;
  std::int64_t n_max = 0;
  std::int64_t K_max = 0;
  std::string format = "text";
  std::string out_path;
  std::string graph_path;
  std::vector<std::int64_t> kmn;
  std::int64_t oracle_k = 0;
  std::int32_t budget = 10;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
  };
  const auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "Output file (stdout when omitted)");
  };

  CLI::App* exact = app.add_subcommand("exact", "One exact value with bound and witness");
  exact->add_option("--m", m, "Pink part size")->required();
  exact->add_option("--n", n, "Black part size")->required();
  exact->add_option("--K", K, "Maximum number of arcs")->required();
  add_format(exact);
  add_out(exact);

  CLI::App* table = app.add_subcommand("table", "Sweep a grid of (m, n, K) values");
  table->add_option("--m-max", m_max, "Largest m")->required()->check(CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max()));
  table->add_option("--n-max", n_max, "Largest n")->required()->check(CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max()));
  table->add_option("--K-max", K_max, "Largest K (capped at m+n per row)")
      ->required()
      ->check(CLI::Range(std::int64_t{2}, std::numeric_limits<std::int64_t>::max()));
  add_format(table);
  add_out(table);

  CLI::App* verify = app.add_subcommand(
      "verify", "Cross-check the optimizer against brute force and the bound");
  verify->add_option("--m-max", m_max, "Largest m")->required()->check(CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max()));
  verify->add_option("--n-max", n_max, "Largest n")->required()->check(CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max()));
  verify->add_option("--K-max", K_max, "Largest K")
      ->required()
      ->check(CLI::Range(std::int64_t{2}, std::numeric_limits<std::int64_t>::max()));
  verify->add_option("--budget", budget, "Brute-force vertex budget")
      ->check(CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max()))
      ->capture_default_str();

  CLI::App* draw = app.add_subcommand("draw", "SVG of an optimal drawing");
  draw->add_option("--m", m, "Pink part size")->required();
  draw->add_option("--n", n, "Black part size")->required();
  draw->add_option("--K", K, "Maximum number of arcs")->required();
  add_out(draw);

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force minimum for a graph");
  CLI::Option* graph_opt =
      oracle->add_option("--graph", graph_path, "Graph file (\"p q\" header, edge lines)");
  CLI::Option* kmn_opt =
      oracle->add_option("--kmn", kmn, "Complete bipartite sizes m,n")
          ->delimiter(',')
          ->expected(2);
  graph_opt->excludes(kmn_opt);
  kmn_opt->excludes(graph_opt);
  oracle->add_option("--k", oracle_k, "Arc limit (0 = unrestricted)")
      ->check(CLI::Range(std::int64_t{0}, std::numeric_limits<std::int64_t>::max()))
      ->capture_default_str();
  oracle->add_option("--budget", budget, "Brute-force vertex budget")
      ->check(CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max()))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (exact->parsed()) {
      cprk::tool::write_output(
          cprk::tool::format_single(cprk::tool::compute_record(m, n, K), format),
          out_path);
    } else if (table->parsed()) {
      cprk::tool::write_output(
          cprk::tool::format_sweep(cprk::tool::sweep_records(m_max, n_max, K_max),
                                   format),
          out_path);
    } else if (verify->parsed()) {
      cprk::OracleConfig config;
      config.max_vertices = budget;
      const cprk::tool::VerifyOutcome outcome =
          cprk::tool::verify_sweep(m_max, n_max, K_max, config);
      if (!outcome.ok) {
        std::cerr << outcome.detail << "\n";
        return 1;
      }
      std::cout << "checked " << outcome.instances
                << " instances, optimizer, brute force and bound all agree\n";
    } else if (draw->parsed()) {
      cprk::tool::write_output(cprk::tool::draw_witness_svg(m, n, K), out_path);
    } else if (oracle->parsed()) {
      if (graph_path.empty() && kmn.empty()) {
        throw std::invalid_argument("oracle needs --graph or --kmn");
      }
      const cprk::GraphSpec graph = graph_path.empty()
                                        ? cprk::complete_bipartite(kmn[0], kmn[1])
                                        : cprk::tool::parse_graph_file(graph_path);
      cprk::OracleConfig config;
      config.max_vertices = budget;
      cprk::tool::write_output(
          cprk::tool::describe_oracle_run(graph, oracle_k, config), "");
    }
    return 0;
  } catch (const cprk::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const cprk::tool::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }
}

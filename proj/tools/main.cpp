#include <CLI11.hpp>

#include <iostream>

#include "nilgraph/cli.hpp"

namespace {

void add_cap_flags(CLI::App* cmd, nilgraph::RunConfig& config) {
  cmd->add_option("--max-order", config.caps.max_order, "largest ring order accepted")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--clique-cap", config.caps.clique_cap,
                  "per-component vertex cap for the exact clique search")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--dominating-cap", config.caps.dominating_cap,
                  "per-component vertex cap for the exact dominating-set search")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--coloring-cap", config.caps.coloring_cap,
                  "per-component vertex cap for the exact coloring searches")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--spectra-cap", config.caps.spectra_cap,
                  "matrix dimension cap for exact nullity certification")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--workers", config.workers,
                  "worker threads (NILGRAPH_WORKERS overrides; 0 = hardware)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nilpotent graph analyzer: exact invariants and closed-form verdicts"};
  app.require_subcommand(1);

  nilgraph::RunConfig analyze_config;
  analyze_config.command = nilgraph::RunConfig::Command::Analyze;
  CLI::App* analyze = app.add_subcommand("analyze", "analyze one ring, e.g. Z12 or Z4xZ9");
  analyze->add_option("ring", analyze_config.ring_text, "ring spec, Z<n> or Z<a>xZ<b>...")
      ->required();
  analyze->add_option("--json", analyze_config.json_path, "write the full report as JSON");
  analyze->add_option("--csv", analyze_config.csv_path, "write the verdict rows as CSV");
  analyze->add_option("--dot", analyze_config.dot_path, "write the graph in DOT format");
  add_cap_flags(analyze, analyze_config);

  nilgraph::RunConfig sweep_config;
  sweep_config.command = nilgraph::RunConfig::Command::Sweep;
  CLI::App* sweep = app.add_subcommand("sweep", "verify every theorem over a ring family");
  sweep->add_flag("--zn", sweep_config.zn, "include Z_n for n in [2, max]");
  sweep->add_flag("--products", sweep_config.products,
                  "include two-factor products ZaxZb with ab <= max");
  sweep->add_option("--max", sweep_config.max, "family bound")->required();
  sweep->add_option("--csv", sweep_config.csv_path, "write verdict rows as CSV");
  sweep->add_option("--json", sweep_config.json_path, "write verdict rows as JSON");
  add_cap_flags(sweep, sweep_config);

  nilgraph::RunConfig verify_config;
  verify_config.command = nilgraph::RunConfig::Command::Verify;
  CLI::App* verify = app.add_subcommand("verify", "run the acceptance criteria");
  verify->add_option("--max", verify_config.max,
                     "cap the per-criterion sweep bounds (0 = stated bounds)");
  verify->add_option("--json", verify_config.json_path, "write the criterion summary as JSON");
  add_cap_flags(verify, verify_config);

  CLI11_PARSE(app, argc, argv);

  nilgraph::RunConfig* config = nullptr;
  if (analyze->parsed()) config = &analyze_config;
  else if (sweep->parsed()) config = &sweep_config;
  else config = &verify_config;
  return nilgraph::run(*config, std::cout, std::cerr);
}

// tropopt: solve, verify and plot tropical optimization and Chebyshev
// location problems described in JSON files.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tropopt/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Closed-form tropical optimization and minimax Chebyshev location"};
  app.require_subcommand(1);

  tropopt::CommandOptions opts;
  std::string semifield;
  std::string path;
  std::string out_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", path, "Problem file (JSON)")->required();
    cmd->add_option("--semifield", semifield, "Override the semifield: max-plus, min-plus, max-times, min-times");
    cmd->add_option("--epsilon", opts.epsilon, "Comparison tolerance (default per semifield, or $TROPOPT_EPSILON)");
    cmd->add_option("--out", out_path, "Write output to this path instead of stdout");
  };

  auto* solve = app.add_subcommand("solve", "Solve a problem and print a JSON report");
  add_common(solve);
  auto* verify = app.add_subcommand("verify", "Cross-check the solver against a brute-force grid search");
  add_common(verify);
  verify->add_option("--grid-step", opts.grid_step, "Grid spacing")->check(CLI::PositiveNumber);
  verify->add_option("--grid-lo", opts.grid_lo, "Grid lower corner")->delimiter(',');
  verify->add_option("--grid-hi", opts.grid_hi, "Grid upper corner")->delimiter(',');
  auto* plot = app.add_subcommand("plot", "Render a two-dimensional problem as SVG");
  add_common(plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : tropopt::kExitInputError;
  }

  if (!semifield.empty()) {
    try {
      opts.semifield = tropopt::parse_semifield(semifield);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return tropopt::kExitInputError;
    }
  }

  std::ofstream file_out;
  if (!out_path.empty()) {
    file_out.open(out_path, std::ios::binary);
    if (!file_out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return tropopt::kExitInputError;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file_out;

  if (*solve) return tropopt::run_solve(path, opts, out, std::cerr);
  if (*verify) return tropopt::run_verify(path, opts, out, std::cerr);
  return tropopt::run_plot(path, opts, out, std::cerr);
}

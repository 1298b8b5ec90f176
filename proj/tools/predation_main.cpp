#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "predation/commands.hpp"

int main(int argc, char** argv) {
  namespace cli = predation::cli;

  CLI::App app{"Solve, verify and map predator-versus-producer games"};
  app.require_subcommand(1);
  bool no_banner = false;
  app.add_flag("--no-banner", no_banner, "Suppress the version banner");

  std::string file;
  cli::SolveOptions solve_options;
  auto* solve = app.add_subcommand("solve", "Classify the equilibrium");
  solve->add_option("file", file, "Scenario file")->required();
  solve->add_flag("--json", solve_options.json, "Print one JSON record");

  std::string csv_path;
  std::string svg_path;
  auto* sweep = app.add_subcommand("sweep", "Sweep the file's parameter grid");
  sweep->add_option("file", file, "Scenario file")->required();
  sweep->add_option("--csv", csv_path, "CSV output path")->required();
  sweep->add_option("--svg", svg_path, "SVG output path");

  auto* verify =
      app.add_subcommand("verify", "Cross-check classifier against oracle");
  verify->add_option("file", file, "Scenario file")->required();

  std::size_t periods = 0;
  auto* trace = app.add_subcommand("trace", "Print the equilibrium path");
  trace->add_option("file", file, "Scenario file")->required();
  trace->add_option("--periods", periods, "Number of periods")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitInputError;
  }

  if (!no_banner && !(solve->parsed() && solve_options.json)) {
    std::cout << "predation " << cli::kVersion << "\n";
  }

  if (solve->parsed()) {
    return cli::cmd_solve(file, solve_options, std::cout, std::cerr);
  }
  if (sweep->parsed()) {
    std::optional<std::string> svg;
    if (!svg_path.empty()) svg = svg_path;
    return cli::cmd_sweep(file, csv_path, svg, std::cout, std::cerr);
  }
  if (verify->parsed()) return cli::cmd_verify(file, std::cout, std::cerr);
  return cli::cmd_trace(file, periods, std::cout, std::cerr);
}

// lpt: exact semiclassical perturbation series for 1D anharmonic oscillators.
//
//   lpt expand --config sextic.cfg --order 11 --format pretty
//   lpt check  --config sextic.cfg --golden tests/data/sextic_K11.series
//   lpt verify --config sextic.cfg --format csv --out report.csv

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "lpt/commands.hpp"
#include "lpt/config.hpp"

namespace {

struct Args {
  std::string config_path;
  std::optional<int> order;
  std::optional<std::string> format;
  std::optional<std::string> out_path;
  bool parity_shortcut = false;
  bool table = false;
  std::optional<std::string> golden;
};

void add_common(CLI::App* cmd, Args& args) {
  cmd->add_option("--config", args.config_path, "Run configuration file")->required();
  cmd->add_option("--order", args.order, "Expansion order K (overrides the config)")->check(CLI::PositiveNumber);
  cmd->add_option("--format", args.format, "Output format")->check(CLI::IsMember({"pretty", "csv", "machine"}));
  cmd->add_option("--out", args.out_path, "Write output to this file instead of stdout");
  cmd->add_flag("--parity-shortcut", args.parity_shortcut, "Skip odd Laurent slots for even potentials");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace lpt;
  CLI::App app{"Exact hbar-expansion perturbation series for one-dimensional anharmonic oscillators"};
  app.require_subcommand(1);

  Args args;
  auto* expand = app.add_subcommand("expand", "Compute energy coefficients E_1..E_K");
  auto* check = app.add_subcommand("check", "Run exact self-consistency checks");
  auto* verify = app.add_subcommand("verify", "Compare the series against basis diagonalization");
  for (auto* cmd : {expand, check, verify}) add_common(cmd, args);
  expand->add_flag("--table", args.table, "Also print the Laurent coefficient table");
  check->add_option("--golden", args.golden, "Machine-format series file to compare against");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kInvalidInput;
  }

  RunConfig cfg;
  cli::CommandOptions opts;
  try {
    cfg = load_config(args.config_path);
    if (args.format) opts.format = parse_output_format(*args.format);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kInvalidInput;
  }
  opts.order = args.order;
  opts.parity_shortcut = args.parity_shortcut;
  opts.print_table = args.table;
  opts.golden = args.golden;

  std::ofstream file;
  if (args.out_path) {
    file.open(*args.out_path);
    if (!file) {
      std::cerr << "error: cannot write '" << *args.out_path << "'\n";
      return cli::kInvalidInput;
    }
  }
  std::ostream& out = args.out_path ? static_cast<std::ostream&>(file) : std::cout;

  if (expand->parsed()) return cli::cmd_expand(cfg, opts, out, std::cerr);
  if (check->parsed()) return cli::cmd_check(cfg, opts, out, std::cerr);
  return cli::cmd_verify(cfg, opts, out, std::cerr);
}

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "lpt/config.hpp"

namespace lpt::cli {

/// Exit codes shared by every command.
enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kInvalidInput = 2 };

/// Command-line overrides layered on top of a RunConfig.
struct CommandOptions {
  std::optional<int> order;
  std::optional<OutputFormat> format;
  bool parity_shortcut = false;
  bool print_table = false;             ///< expand: also emit the Laurent table
  std::optional<std::string> golden;    ///< check: machine-format series to compare against
};

/// Writes E_1..E_K. Exit 2 on invalid input, 1 on internal error.
int cmd_expand(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out, std::ostream& err);

/// Runs every self-consistency suite that applies to the configured
/// potential and prints one verdict line per suite. Exit 0 iff all pass.
int cmd_check(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out, std::ostream& err);

/// Diagonalization oracle against the series. Exit 1 on a bound violation or
/// series breakdown, 2 on basis non-convergence or a missing oracle block.
int cmd_verify(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace lpt::cli

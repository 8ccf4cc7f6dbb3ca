#pragma once

// Run configuration: an INI-style text file with one block per section.
//
//   [potential]
//   m = 1
//   omega = 1
//   term = 4 1/2 1        # i, coefficient, lambda exponent: (1/2) lambda x^6
//
//   [expansion]
//   order = 11
//   parity_shortcut = false
//
//   [output]
//   format = pretty       # pretty | csv | machine
//
//   [oracle]
//   lambda = 1/1000       # rational or decimal
//   basis = 60
//   check_basis = 80
//   levels = 0 1 2 3
//   convergence_tolerance = 1e-10
//   bound_factor = 10
//   bound_floor = 1e-10
//
// Potential coefficients must be exact ("p/q" or integers). Repeated terms
// with the same index add up.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpt/engine.hpp"
#include "lpt/errors.hpp"
#include "lpt/oracle.hpp"
#include "lpt/rational.hpp"

namespace lpt {

class ConfigError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

enum class OutputFormat { pretty, csv, machine };

OutputFormat parse_output_format(std::string_view text);
const char* to_string(OutputFormat format);

struct TermSpec {
  int index = 0;  ///< i in f_i x^(i+2)
  BigRational coefficient;
  unsigned lambda_exponent = 0;

  friend bool operator==(const TermSpec&, const TermSpec&) = default;
};

struct OracleConfig {
  BigRational lambda;
  int basis = 60;
  std::vector<int> levels{0};
  oracle::ComparePolicy policy;

  friend bool operator==(const OracleConfig&, const OracleConfig&) = default;
};

struct RunConfig {
  BigRational mass{1};
  BigRational omega{1};
  std::vector<TermSpec> terms;
  std::optional<int> order;
  bool parity_shortcut = false;
  OutputFormat format = OutputFormat::pretty;
  std::optional<OracleConfig> oracle;

  /// Unvalidated potential assembled from the term list.
  [[nodiscard]] PotentialSpec potential() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Throws ConfigError naming the line and field on any problem.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

/// Canonical text form; parse_config(render_config(c)) == c.
std::string render_config(const RunConfig& config);

}  // namespace lpt

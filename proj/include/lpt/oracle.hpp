#pragma once

// Floating-point cross-check of the exact series: diagonalize
// H = -1/(2m) d^2/dx^2 + V(x) (hbar = 1) in a truncated harmonic-oscillator
// basis and compare the low-lying eigenvalues with optimally truncated
// partial sums of E = sum_k E_k.

#include <string>
#include <vector>

#include "lpt/engine.hpp"
#include "lpt/kernels.hpp"
#include "lpt/matrix.hpp"
#include "lpt/rational.hpp"

namespace lpt::oracle {

struct PowerTerm {
  int power = 0;  ///< exponent of x
  double coefficient = 0.0;
};

struct OracleProblem {
  double mass = 1.0;
  double omega = 1.0;
  BigRational lambda_exact;
  double lambda = 0.0;
  std::vector<PowerTerm> terms;  ///< anharmonic part at this lambda
  int basis_size = 60;
  std::vector<int> levels;
};

/// Mirrors a potential at a concrete coupling. Throws ValidationError when
/// the basis does not comfortably hold the requested levels.
OracleProblem make_problem(const PotentialSpec& spec, const BigRational& lambda, int basis_size,
                           std::vector<int> levels);

/// <i|x|i+1> = sqrt((i+1) / (2 m omega)), zero diagonal.
Matrix position_matrix(int dim, double mass, double omega);

/// diag(omega (i + 1/2)) + sum_terms coefficient * X^power, with X the
/// truncated position matrix.
Matrix build_hamiltonian(const OracleProblem& problem);

/// `count` smallest eigenvalues, ascending.
std::vector<double> lowest_eigenvalues(const Matrix& h, int count, const kernels::JacobiOptions& options = {});

struct ComparePolicy {
  int check_basis_size = 0;         ///< 0 means twice the problem's basis
  double convergence_tolerance = 1e-10;
  double bound_factor = 10.0;
  double bound_floor = 1e-10;

  friend bool operator==(const ComparePolicy&, const ComparePolicy&) = default;
};

enum class ReportStatus { pass, bound_violated, series_breakdown, basis_not_converged };

struct LevelReport {
  int level = 0;
  double eigenvalue = 0.0;
  double eigenvalue_check = 0.0;  ///< same level at the larger basis
  double series_partial_sum = 0.0;
  int truncation_order = 0;       ///< k*, the first omitted order; order + 1 if none omitted
  double first_omitted_term = 0.0;
  double discrepancy = 0.0;
  double bound = 0.0;
  bool within_bound = false;
};

struct OracleReport {
  ReportStatus status = ReportStatus::pass;
  std::vector<LevelReport> levels;
  std::string note;
};

/// Optimal truncation per level: k* minimizes |E_k hbar^k| over the orders
/// after the first whose coefficient polynomial is nonzero; terms before k*
/// are summed. Each level passes when
/// |eigenvalue - partial sum| <= max(bound_factor |term_{k*}|, bound_floor).
/// A level whose first two nonzero terms do not decrease marks the report
/// series_breakdown; otherwise a level whose eigenvalue moves by at least
/// convergence_tolerance between the two basis sizes marks it
/// basis_not_converged; otherwise a bound miss marks it bound_violated.
OracleReport compare_series(const EnergySeries& series, const OracleProblem& problem, const ComparePolicy& policy = {});

const char* to_string(ReportStatus status);

}  // namespace lpt::oracle

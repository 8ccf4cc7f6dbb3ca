#include "lpt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "lpt/errors.hpp"

namespace lpt::oracle {

OracleProblem make_problem(const PotentialSpec& spec, const BigRational& lambda, int basis_size,
                           std::vector<int> levels) {
  const PotentialSpec valid = validate_potential(spec);
  if (levels.empty()) throw ValidationError("oracle: no levels requested");
  if (std::any_of(levels.begin(), levels.end(), [](int n) { return n < 0; })) {
    throw ValidationError("oracle: levels must be nonnegative");
  }
  const int top = *std::max_element(levels.begin(), levels.end());
  const int degree = valid.max_index() + 2;
  if (basis_size <= 2 * top + degree) {
    throw ValidationError("oracle: basis size " + std::to_string(basis_size) + " must exceed 2*max(level) + degree = " +
                          std::to_string(2 * top + degree));
  }

  OracleProblem p;
  p.mass = valid.mass.to_double();
  p.omega = valid.omega.to_double();
  p.lambda_exact = lambda;
  p.lambda = lambda.to_double();
  p.basis_size = basis_size;
  p.levels = std::move(levels);
  for (const auto& [i, f] : valid.couplings) {
    p.terms.push_back(PowerTerm{i + 2, f.eval(0, lambda).to_double()});
  }
  return p;
}

Matrix position_matrix(int dim, double mass, double omega) {
  if (dim < 2) throw ValidationError("position_matrix: dimension must be >= 2");
  Matrix x(static_cast<std::size_t>(dim));
  for (std::size_t i = 0; i + 1 < x.dim(); ++i) {
    const double v = std::sqrt(static_cast<double>(i + 1) / (2.0 * mass * omega));
    x(i, i + 1) = v;
    x(i + 1, i) = v;
  }
  return x;
}

Matrix build_hamiltonian(const OracleProblem& problem) {
  const auto dim = static_cast<std::size_t>(problem.basis_size);
  std::vector<double> diag(dim);
  for (std::size_t i = 0; i < dim; ++i) diag[i] = problem.omega * (static_cast<double>(i) + 0.5);
  Matrix h = Matrix::diagonal(diag);
  if (problem.terms.empty()) return h;

  const Matrix x = position_matrix(problem.basis_size, problem.mass, problem.omega);
  int top = 0;
  for (const auto& t : problem.terms) top = std::max(top, t.power);

  Matrix power = x;
  for (int p = 1; p <= top; ++p) {
    if (p > 1) power = kernels::multiply(power, x);
    for (const auto& t : problem.terms) {
      if (t.power != p || t.coefficient == 0.0) continue;
      Matrix scaled = power;
      scaled *= t.coefficient;
      h += scaled;
    }
  }
  // Round-off in the products can leave the last bit asymmetric.
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      const double avg = 0.5 * (h(i, j) + h(j, i));
      h(i, j) = avg;
      h(j, i) = avg;
    }
  }
  return h;
}

std::vector<double> lowest_eigenvalues(const Matrix& h, int count, const kernels::JacobiOptions& options) {
  if (count < 0 || static_cast<std::size_t>(count) > h.dim()) {
    throw ValidationError("lowest_eigenvalues: count " + std::to_string(count) + " exceeds dimension " +
                          std::to_string(h.dim()));
  }
  auto all = kernels::jacobi_eigenvalues(h, options).eigenvalues;
  all.resize(static_cast<std::size_t>(count));
  return all;
}

const char* to_string(ReportStatus status) {
  switch (status) {
    case ReportStatus::pass: return "pass";
    case ReportStatus::bound_violated: return "bound-violated";
    case ReportStatus::series_breakdown: return "series-breakdown";
    case ReportStatus::basis_not_converged: return "basis-not-converged";
  }
  return "unknown";
}

OracleReport compare_series(const EnergySeries& series, const OracleProblem& problem, const ComparePolicy& policy) {
  if (series.order < 3) throw ValidationError("compare_series: needs a series of order >= 3");
  const int top = *std::max_element(problem.levels.begin(), problem.levels.end());
  const int count = top + 1;

  OracleProblem check = problem;
  check.basis_size = policy.check_basis_size > 0 ? policy.check_basis_size : 2 * problem.basis_size;
  const auto eig = lowest_eigenvalues(build_hamiltonian(problem), count);
  const auto eig_check = lowest_eigenvalues(build_hamiltonian(check), count);

  std::vector<int> orders;
  for (int k = 1; k <= series.order; ++k) {
    if (!series[k].is_zero()) orders.push_back(k);
  }

  OracleReport report;
  std::ostringstream note;
  for (int level : problem.levels) {
    LevelReport r;
    r.level = level;
    r.eigenvalue = eig[static_cast<std::size_t>(level)];
    r.eigenvalue_check = eig_check[static_cast<std::size_t>(level)];

    const auto exact = evaluate_energy(series, static_cast<unsigned>(level), problem.lambda_exact, 1, series.order);
    const auto term = [&](int k) { return exact.terms[static_cast<std::size_t>(k - 1)]; };

    int k_star = series.order + 1;
    BigRational omitted;
    for (std::size_t idx = 1; idx < orders.size(); ++idx) {
      const int k = orders[idx];
      if (k_star > series.order || term(k).abs() < omitted.abs()) {
        k_star = k;
        omitted = term(k);
      }
    }
    BigRational partial;
    for (int k : orders) {
      if (k < k_star) partial += term(k);
    }
    r.truncation_order = k_star;
    r.first_omitted_term = omitted.to_double();
    r.series_partial_sum = partial.to_double();
    r.discrepancy = std::abs(r.eigenvalue - r.series_partial_sum);
    r.bound = std::max(policy.bound_factor * std::abs(r.first_omitted_term), policy.bound_floor);
    r.within_bound = r.discrepancy <= r.bound;

    const bool breakdown = orders.size() >= 2 && term(orders[1]).abs() >= term(orders[0]).abs();
    const bool unconverged = std::abs(r.eigenvalue - r.eigenvalue_check) >= policy.convergence_tolerance;
    if (breakdown) {
      r.within_bound = false;
      report.status = ReportStatus::series_breakdown;
      note << "level " << level << ": |E_" << orders[1] << " term| = " << term(orders[1]).abs().to_double()
           << " is not smaller than |E_" << orders[0] << " term| = " << term(orders[0]).abs().to_double()
           << "; the series is asymptotic and this coupling is too large for optimal truncation; ";
    }
    if (unconverged) {
      if (report.status != ReportStatus::series_breakdown) report.status = ReportStatus::basis_not_converged;
      note << "level " << level << ": eigenvalue moved by " << std::abs(r.eigenvalue - r.eigenvalue_check)
           << " between basis sizes " << problem.basis_size << " and " << check.basis_size << "; ";
    }
    if (!breakdown && !unconverged && !r.within_bound) {
      if (report.status == ReportStatus::pass) report.status = ReportStatus::bound_violated;
      note << "level " << level << ": discrepancy " << r.discrepancy << " exceeds bound " << r.bound << "; ";
    }
    report.levels.push_back(r);
  }
  report.note = note.str();
  if (!report.note.empty()) report.note.resize(report.note.size() - 2);
  return report;
}

}  // namespace lpt::oracle

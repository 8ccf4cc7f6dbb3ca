#include <doctest.h>

#include <cmath>

#include "lpt/engine.hpp"
#include "lpt/errors.hpp"
#include "lpt/kernels.hpp"
#include "lpt/oracle.hpp"

using namespace lpt;
using namespace lpt::oracle;

namespace {

BigRational q(long a, long b = 1) { return BigRational(a, b); }

PotentialSpec sextic() {
  PotentialSpec s;
  s.couplings[4] = BiPoly::lambda() * q(1, 2);
  return s;
}

Matrix power(const Matrix& x, int p) {
  Matrix out = x;
  for (int i = 1; i < p; ++i) out = kernels::multiply(out, x);
  return out;
}

}  // namespace

TEST_CASE("position_matrix") {
  const Matrix x2 = position_matrix(2, 1, 1);
  CHECK(x2(0, 1) == doctest::Approx(std::sqrt(0.5)));
  CHECK(x2(0, 0) == 0.0);
  const Matrix x3 = position_matrix(3, 1, 1);
  CHECK(x3(0, 1) == doctest::Approx(std::sqrt(0.5)));
  CHECK(x3(1, 2) == doctest::Approx(1.0));
  CHECK(x3(0, 2) == 0.0);
  for (int dim : {2, 9, 50}) CHECK(position_matrix(dim, 0.7, 1.3).is_symmetric());
  CHECK(position_matrix(3, 2, 2)(0, 1) == doctest::Approx(std::sqrt(1.0 / 8.0)));
  CHECK_THROWS_AS(position_matrix(1, 1, 1), ValidationError);
}

TEST_CASE("matrix element closed forms") {
  const int dim = 60;
  const Matrix x = position_matrix(dim, 1, 1);
  const Matrix x2 = power(x, 2);
  const Matrix x6 = power(x, 6);
  for (int level = 0; level <= 10; ++level) {
    const auto i = static_cast<std::size_t>(level);
    CHECK(x2(i, i) == doctest::Approx(level + 0.5).epsilon(1e-12));
    const double l = level;
    CHECK(x6(i, i) == doctest::Approx((20 * l * l * l + 30 * l * l + 40 * l + 15) / 8).epsilon(1e-12));
  }
  // m and omega enter through 1/(m omega)
  const Matrix y2 = power(position_matrix(dim, 2.0, 1.5), 2);
  CHECK(y2(3, 3) == doctest::Approx(3.5 / 3.0).epsilon(1e-12));
}

TEST_CASE("make_problem") {
  const auto p = make_problem(sextic(), q(1, 1000), 60, {0, 1, 2, 3});
  CHECK(p.lambda == doctest::Approx(1e-3));
  REQUIRE(p.terms.size() == 1);
  CHECK(p.terms[0].power == 6);
  CHECK(p.terms[0].coefficient == doctest::Approx(5e-4));
  CHECK_THROWS_AS(make_problem(sextic(), q(1), 10, {3}), ValidationError);  // 10 <= 2*3 + 6
  CHECK_THROWS_AS(make_problem(sextic(), q(1), 60, {}), ValidationError);
  CHECK_THROWS_AS(make_problem(sextic(), q(1), 60, {-1}), ValidationError);
}

TEST_CASE("build_hamiltonian") {
  SUBCASE("harmonic is diagonal") {
    const Matrix h = build_hamiltonian(make_problem(PotentialSpec{}, 0, 10, {0}));
    for (std::size_t i = 0; i < 10; ++i) {
      CHECK(h(i, i) == doctest::Approx(i + 0.5));
      for (std::size_t j = 0; j < 10; ++j) {
        if (i != j) CHECK(h(i, j) == 0.0);
      }
    }
  }
  SUBCASE("sextic at lambda = 1 has <0|H|0> = 1/2 + 15/16") {
    const Matrix h = build_hamiltonian(make_problem(sextic(), 1, 60, {0}));
    CHECK(h(0, 0) == doctest::Approx(0.5 + 0.9375).epsilon(1e-12));
    CHECK(h.is_symmetric());
  }
  SUBCASE("lambda = 0 reduces to the harmonic case") {
    CHECK(build_hamiltonian(make_problem(sextic(), 0, 20, {0})) ==
          build_hamiltonian(make_problem(PotentialSpec{}, 0, 20, {0})));
  }
}

TEST_CASE("lowest_eigenvalues") {
  const std::vector<double> d{2.0, 1.0, 5.0};
  CHECK(lowest_eigenvalues(Matrix::diagonal(d), 2) == std::vector<double>{1.0, 2.0});
  CHECK_THROWS_AS(lowest_eigenvalues(Matrix::diagonal(d), 4), ValidationError);

  const auto h = build_hamiltonian(make_problem(PotentialSpec{}, 0, 40, {0}));
  const auto e = lowest_eigenvalues(h, 4);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(e[static_cast<std::size_t>(i)] - (i + 0.5)) < 1e-12);
}

TEST_CASE("sextic ground state at lambda = 1e-3: basis sizes agree and the value is pinned") {
  const auto p60 = make_problem(sextic(), q(1, 1000), 60, {0});
  auto p80 = p60;
  p80.basis_size = 80;
  const auto e60 = lowest_eigenvalues(build_hamiltonian(p60), 4);
  const auto e80 = lowest_eigenvalues(build_hamiltonian(p80), 4);
  CHECK(std::abs(e60[0] - e80[0]) < 1e-10);
  // Serial reference solver, independent ordering.
  const auto serial = kernels::jacobi_eigenvalues_serial(build_hamiltonian(p80)).eigenvalues;
  CHECK(std::abs(serial[0] - e80[0]) < 1e-12);
  // Pinned from the first converged run.
  CHECK(e80[0] == doctest::Approx(0.50092440).epsilon(1e-8));
  for (std::size_t i = 1; i < e80.size(); ++i) CHECK(e80[i] > e80[i - 1]);
  CHECK(e80[0] > 0);
}

TEST_CASE("compare_series") {
  SUBCASE("harmonic: series exact at first order") {
    const auto ex = expand(PotentialSpec{}, 3);
    const auto report = compare_series(ex.series, make_problem(PotentialSpec{}, 0, 40, {0, 1, 2, 3}));
    CHECK(report.status == ReportStatus::pass);
    for (const auto& l : report.levels) {
      CHECK(l.discrepancy <= 1e-10);
      CHECK(l.truncation_order == 4);
      CHECK(l.first_omitted_term == 0.0);
    }
  }
  SUBCASE("sextic lambda = 1e-3, ground state") {
    const auto ex = expand(sextic(), 11);
    ComparePolicy policy;
    policy.check_basis_size = 80;
    const auto report = compare_series(ex.series, make_problem(sextic(), q(1, 1000), 60, {0}), policy);
    CHECK(report.status == ReportStatus::pass);
    const auto& l = report.levels.at(0);
    CHECK(l.truncation_order == 11);
    CHECK(l.series_partial_sum == doctest::Approx(0.50092440).epsilon(1e-8));
    CHECK(l.discrepancy < 1e-8);
    CHECK(l.discrepancy == doctest::Approx(std::abs(l.eigenvalue - l.series_partial_sum)));
  }
  SUBCASE("sextic lambda = 1e-3, third excited state") {
    const auto ex = expand(sextic(), 11);
    ComparePolicy policy;
    policy.check_basis_size = 80;
    const auto report = compare_series(ex.series, make_problem(sextic(), q(1, 1000), 60, {3}), policy);
    CHECK(report.status == ReportStatus::pass);
    CHECK(report.levels.at(0).within_bound);
  }
  SUBCASE("strong coupling is rejected as a series breakdown") {
    const auto ex = expand(sextic(), 11);
    const auto report = compare_series(ex.series, make_problem(sextic(), 1, 60, {0}));
    CHECK(report.status == ReportStatus::series_breakdown);
    CHECK(report.note.find("asymptotic") != std::string::npos);
  }
  SUBCASE("a tiny basis is flagged as not converged") {
    const auto ex = expand(sextic(), 11);
    ComparePolicy policy;
    policy.check_basis_size = 60;
    const auto report = compare_series(ex.series, make_problem(sextic(), q(1, 100), 13, {0}), policy);
    CHECK(report.status == ReportStatus::basis_not_converged);
  }
  SUBCASE("a wrong series violates the bound") {
    auto ex = expand(sextic(), 11);
    ex.series.coefficients[3] += BiPoly::lambda() * q(1, 100);
    ComparePolicy policy;
    policy.check_basis_size = 80;
    const auto report = compare_series(ex.series, make_problem(sextic(), q(1, 1000), 60, {0}), policy);
    CHECK(report.status == ReportStatus::bound_violated);
  }
  SUBCASE("order below 3 is rejected") {
    const auto ex = expand(sextic(), 2);
    CHECK_THROWS_AS(compare_series(ex.series, make_problem(sextic(), 0, 40, {0})), ValidationError);
  }
}

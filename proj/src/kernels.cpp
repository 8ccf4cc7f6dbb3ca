#include "lpt/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lpt/errors.hpp"

namespace lpt::kernels {

namespace {

void check_square_pair(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("multiply: dimension mismatch");
}

struct Rotation {
  std::size_t p = 0;
  std::size_t q = 0;
  double c = 1.0;
  double s = 0.0;
  bool active = false;
};

// Rotation J(p, q) with J^T A J zeroing A(p, q).
Rotation make_rotation(const Matrix& a, std::size_t p, std::size_t q) {
  Rotation r{p, q};
  const double apq = a(p, q);
  if (apq == 0.0) return r;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  r.c = 1.0 / std::sqrt(t * t + 1.0);
  r.s = t * r.c;
  r.active = true;
  return r;
}

void rotate_rows(Matrix& a, const Rotation& r) {
  auto rp = a.row(r.p);
  auto rq = a.row(r.q);
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const double x = rp[j];
    const double y = rq[j];
    rp[j] = r.c * x - r.s * y;
    rq[j] = r.s * x + r.c * y;
  }
}

void rotate_cols(Matrix& a, const Rotation& r) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double x = a(i, r.p);
    const double y = a(i, r.q);
    a(i, r.p) = r.c * x - r.s * y;
    a(i, r.q) = r.s * x + r.c * y;
  }
}

std::vector<double> sorted_diagonal(const Matrix& a) {
  std::vector<double> d(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) d[i] = a(i, i);
  std::sort(d.begin(), d.end());
  return d;
}

bool converged(const Matrix& a, double norm, const JacobiOptions& options) {
  return a.off_diagonal_norm() <= options.relative_tolerance * norm;
}

[[noreturn]] void fail_to_converge(const JacobiOptions& options, double off, double norm) {
  throw ConvergenceError("Jacobi: no convergence after " + std::to_string(options.max_sweeps) +
                         " sweeps (off-diagonal norm " + std::to_string(off) + ", matrix norm " +
                         std::to_string(norm) + ")");
}

}  // namespace

Matrix multiply_serial(const Matrix& a, const Matrix& b) {
  check_square_pair(a, b);
  const std::size_t n = a.dim();
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  check_square_pair(a, b);
  const auto n = static_cast<std::ptrdiff_t>(a.dim());
  Matrix c(a.dim());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ii = 0; ii < n; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    auto ci = c.row(i);
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      const auto bk = b.row(k);
      for (std::size_t j = 0; j < a.dim(); ++j) ci[j] += aik * bk[j];
    }
  }
  return c;
}

JacobiResult jacobi_eigenvalues_serial(Matrix a, const JacobiOptions& options) {
  if (!a.is_symmetric()) throw std::invalid_argument("Jacobi: matrix is not symmetric");
  const double norm = a.frobenius_norm();
  JacobiResult result;
  while (!converged(a, norm, options)) {
    if (result.sweeps == options.max_sweeps) fail_to_converge(options, a.off_diagonal_norm(), norm);
    for (std::size_t p = 0; p + 1 < a.dim(); ++p) {
      for (std::size_t q = p + 1; q < a.dim(); ++q) {
        const Rotation r = make_rotation(a, p, q);
        if (!r.active) continue;
        rotate_rows(a, r);
        rotate_cols(a, r);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
    ++result.sweeps;
  }
  result.eigenvalues = sorted_diagonal(a);
  return result;
}

JacobiResult jacobi_eigenvalues(Matrix a, const JacobiOptions& options) {
  if (!a.is_symmetric()) throw std::invalid_argument("Jacobi: matrix is not symmetric");
  const std::size_t dim = a.dim();
  const double norm = a.frobenius_norm();
  JacobiResult result;
  if (dim < 2) {
    result.eigenvalues = sorted_diagonal(a);
    return result;
  }

  // Round-robin schedule over an even number of players; index `dim` is a
  // bye when the dimension is odd.
  const std::size_t players = dim + dim % 2;
  const std::size_t half = players / 2;
  std::vector<std::size_t> seat(players);
  std::iota(seat.begin(), seat.end(), std::size_t{0});
  std::vector<Rotation> rotations(half);

  while (!converged(a, norm, options)) {
    if (result.sweeps == options.max_sweeps) fail_to_converge(options, a.off_diagonal_norm(), norm);
    for (std::size_t round = 0; round + 1 < players; ++round) {
      const auto h = static_cast<std::ptrdiff_t>(half);
#pragma omp parallel
      {
#pragma omp for schedule(static)
        for (std::ptrdiff_t t = 0; t < h; ++t) {
          std::size_t p = seat[static_cast<std::size_t>(t)];
          std::size_t q = seat[players - 1 - static_cast<std::size_t>(t)];
          if (p > q) std::swap(p, q);
          rotations[static_cast<std::size_t>(t)] = q < dim ? make_rotation(a, p, q) : Rotation{};
        }
#pragma omp for schedule(static)
        for (std::ptrdiff_t t = 0; t < h; ++t) {
          const Rotation& r = rotations[static_cast<std::size_t>(t)];
          if (r.active) rotate_rows(a, r);
        }
#pragma omp for schedule(static)
        for (std::ptrdiff_t t = 0; t < h; ++t) {
          const Rotation& r = rotations[static_cast<std::size_t>(t)];
          if (r.active) rotate_cols(a, r);
        }
#pragma omp for schedule(static)
        for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(dim); ++ii) {
          const auto i = static_cast<std::size_t>(ii);
          for (std::size_t j = i + 1; j < dim; ++j) {
            const double avg = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = avg;
          }
        }
#pragma omp for schedule(static)
        for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(dim); ++ii) {
          const auto i = static_cast<std::size_t>(ii);
          for (std::size_t j = 0; j < i; ++j) a(i, j) = a(j, i);
        }
      }
      for (const Rotation& r : rotations) {
        if (r.active) {
          a(r.p, r.q) = 0.0;
          a(r.q, r.p) = 0.0;
        }
      }
      std::rotate(seat.begin() + 1, seat.end() - 1, seat.end());
    }
    ++result.sweeps;
  }
  result.eigenvalues = sorted_diagonal(a);
  return result;
}

}  // namespace lpt::kernels

#pragma once

// Dense linear-algebra kernels for the diagonalization oracle. Each kernel
// has an OpenMP version and a plain serial reference; the tests hold the two
// to agreement and bench/ compares their speed.

#include <vector>

#include "lpt/matrix.hpp"

namespace lpt::kernels {

Matrix multiply_serial(const Matrix& a, const Matrix& b);
Matrix multiply(const Matrix& a, const Matrix& b);

struct JacobiOptions {
  /// Stop once ||offdiag(A)||_F <= relative_tolerance * ||A||_F.
  double relative_tolerance = 1e-13;
  int max_sweeps = 100;
};

struct JacobiResult {
  std::vector<double> eigenvalues;  ///< ascending
  int sweeps = 0;
};

/// Cyclic-by-row Jacobi, one rotation at a time.
JacobiResult jacobi_eigenvalues_serial(Matrix a, const JacobiOptions& options = {});

/// Cyclic Jacobi in round-robin (tournament) ordering: each round applies
/// dim/2 disjoint rotations at once, with row and column updates spread over
/// OpenMP threads.
JacobiResult jacobi_eigenvalues(Matrix a, const JacobiOptions& options = {});

}  // namespace lpt::kernels

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lpt {

/// Dense square matrix of doubles, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

  static Matrix identity(std::size_t dim);
  static Matrix diagonal(std::span<const double> entries);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  [[nodiscard]] std::span<double> row(std::size_t i) { return {data_.data() + i * dim_, dim_}; }
  [[nodiscard]] std::span<const double> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }

  [[nodiscard]] bool is_symmetric() const;
  [[nodiscard]] double frobenius_norm() const;
  [[nodiscard]] double off_diagonal_norm() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator*=(double s);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

}  // namespace lpt

#pragma once

#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "lpt/rational.hpp"

namespace lpt {

/// Exponent pair of a term n^deg_n * lambda^deg_lambda.
struct Monomial {
  unsigned deg_n = 0;
  unsigned deg_lambda = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial over the rationals in the two formal symbols n (quantum
/// number) and lambda (coupling).
///
/// Zero coefficients are never stored, so two polynomials compare equal
/// exactly when they are mathematically equal. Terms iterate in ascending
/// (deg_n, deg_lambda) order.
class BiPoly {
 public:
  using TermMap = std::map<Monomial, BigRational>;

  BiPoly() = default;
  BiPoly(BigRational constant);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  BiPoly(T constant) : BiPoly(BigRational(constant)) {}  // NOLINT(google-explicit-constructor)

  static BiPoly term(BigRational coefficient, unsigned deg_n, unsigned deg_lambda);
  static BiPoly n() { return term(1, 1, 0); }
  static BiPoly lambda() { return term(1, 0, 1); }

  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] BigRational coefficient(Monomial m) const;

  [[nodiscard]] unsigned degree_n() const;
  [[nodiscard]] unsigned degree_lambda() const;
  /// True when no term contains n.
  [[nodiscard]] bool is_lambda_only() const { return degree_n() == 0; }

  /// Every coefficient divided by a nonzero scalar. Throws std::domain_error
  /// when the divisor is zero.
  [[nodiscard]] BiPoly scale_div(const BigRational& divisor) const;

  /// Exact value at n = n_val, lambda = lambda_val.
  [[nodiscard]] BigRational eval(const BigRational& n_val, const BigRational& lambda_val) const;

  /// Partial substitution lambda -> factor * lambda.
  [[nodiscard]] BiPoly rescale_lambda(const BigRational& factor) const;

  /// Coefficient of lambda^deg_lambda, as a polynomial in n alone.
  [[nodiscard]] BiPoly lambda_slice(unsigned deg_lambda) const;

  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const BiPoly& rhs);
  BiPoly& operator*=(const BigRational& rhs);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const BigRational& s) { return a *= s; }
  friend BiPoly operator*(const BigRational& s, BiPoly a) { return a *= s; }
  BiPoly operator-() const;

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// Deterministic exponent-sorted term list, e.g. "{(0,0):1/2, (1,0):1}".
  /// The zero polynomial renders as "{}".
  [[nodiscard]] std::string to_string() const;
  /// Inverse of to_string.
  static BiPoly parse(std::string_view text);

 private:
  void add_term(const Monomial& m, const BigRational& c);
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

}  // namespace lpt

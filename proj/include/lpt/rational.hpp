#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace lpt {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every arithmetic result is
/// canonicalized, so equality is structural. Division by zero throws
/// std::domain_error instead of aborting inside GMP.
class BigRational {
 public:
  BigRational() = default;

  template <std::integral T>
  BigRational(T value)  // NOLINT(google-explicit-constructor)
  {
    if constexpr (std::is_signed_v<T>) {
      value_ = static_cast<long>(value);
    } else {
      value_ = static_cast<unsigned long>(value);
    }
  }

  BigRational(long numerator, long denominator);

  /// Parses "p/q" or "p" (optional leading sign). Anything else, including
  /// decimal points and exponents, throws ValidationError.
  static BigRational parse(std::string_view text);

  /// Parses an exact rational from "p/q", an integer, or a decimal literal
  /// such as "0.001", "-2.5e-3", "1E4". The decimal is converted exactly.
  static BigRational parse_decimal(std::string_view text);

  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const;

  [[nodiscard]] std::string numerator() const;
  [[nodiscard]] std::string denominator() const;

  /// "p/q", or "p" when the denominator is one.
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] double to_double() const { return value_.get_d(); }

  [[nodiscard]] BigRational abs() const;
  [[nodiscard]] BigRational pow(unsigned exponent) const;
  [[nodiscard]] BigRational reciprocal() const;

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  [[nodiscard]] const mpq_class& raw() const { return value_; }

 private:
  explicit BigRational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

}  // namespace lpt

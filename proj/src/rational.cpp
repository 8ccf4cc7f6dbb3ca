#include "lpt/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "lpt/errors.hpp"

namespace lpt {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

BigRational::BigRational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("BigRational: zero denominator");
  value_ = mpq_class(numerator, 1);
  value_ /= denominator;
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw ValidationError("malformed rational '" + std::string(text) + "': expected p/q or integer");
  }
  mpq_class v(parse_integer(num));
  if (slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
      throw ValidationError("malformed rational '" + std::string(text) + "': bad denominator");
    }
    mpz_class d = parse_integer(den);
    if (d == 0) throw ValidationError("malformed rational '" + std::string(text) + "': zero denominator");
    v /= d;
  }
  v.canonicalize();
  return BigRational(std::move(v));
}

BigRational BigRational::parse_decimal(std::string_view text) {
  if (text.find('/') != std::string_view::npos || is_integer_literal(text)) return parse(text);

  const auto bad = [&] { return ValidationError("malformed number '" + std::string(text) + "'"); };
  std::string_view mantissa = text;
  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string_view exp = text.substr(e + 1);
    if (!is_integer_literal(exp) || exp.size() > 6) throw bad();
    exponent = std::stol(std::string(exp));
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) --exponent;
    } else {
      throw bad();
    }
  }
  if (digits.empty()) throw bad();

  mpq_class v(mpz_class(digits, 10));
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) {
    v /= scale;
  } else {
    v *= scale;
  }
  if (negative) v = -v;
  v.canonicalize();
  return BigRational(std::move(v));
}

bool BigRational::is_integer() const { return value_.get_den() == 1; }

std::string BigRational::numerator() const { return value_.get_num().get_str(); }
std::string BigRational::denominator() const { return value_.get_den().get_str(); }

std::string BigRational::to_string() const {
  if (is_integer()) return numerator();
  return numerator() + "/" + denominator();
}

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(value_))); }

BigRational BigRational::pow(unsigned exponent) const {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return BigRational(mpq_class(num, den));
}

BigRational BigRational::reciprocal() const { return BigRational(1) / *this; }

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("BigRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

}  // namespace lpt

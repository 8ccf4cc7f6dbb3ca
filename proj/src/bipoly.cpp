#include "lpt/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "lpt/errors.hpp"

namespace lpt {

BiPoly::BiPoly(BigRational constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, std::move(constant));
}

BiPoly BiPoly::term(BigRational coefficient, unsigned deg_n, unsigned deg_lambda) {
  BiPoly p;
  p.add_term(Monomial{deg_n, deg_lambda}, coefficient);
  return p;
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

BigRational BiPoly::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRational{} : it->second;
}

unsigned BiPoly::degree_n() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.deg_n);
  return d;
}

unsigned BiPoly::degree_lambda() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.deg_lambda);
  return d;
}

void BiPoly::add_term(const Monomial& m, const BigRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiPoly BiPoly::scale_div(const BigRational& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("BiPoly::scale_div: division by zero");
  BiPoly out = *this;
  for (auto& [m, c] : out.terms_) c /= divisor;
  return out;
}

BigRational BiPoly::eval(const BigRational& n_val, const BigRational& lambda_val) const {
  BigRational sum;
  for (const auto& [m, c] : terms_) sum += c * n_val.pow(m.deg_n) * lambda_val.pow(m.deg_lambda);
  return sum;
}

BiPoly BiPoly::rescale_lambda(const BigRational& factor) const {
  BiPoly out;
  for (const auto& [m, c] : terms_) out.add_term(m, c * factor.pow(m.deg_lambda));
  return out;
}

BiPoly BiPoly::lambda_slice(unsigned deg_lambda) const {
  BiPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.deg_lambda == deg_lambda) out.add_term(Monomial{m.deg_n, 0}, c);
  }
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(Monomial{ma.deg_n + mb.deg_n, ma.deg_lambda + mb.deg_lambda}, ca * cb);
    }
  }
  return out;
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) { return *this = *this * rhs; }

BiPoly& BiPoly::operator*=(const BigRational& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= rhs;
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string BiPoly::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) s += ", ";
    first = false;
    s += "(" + std::to_string(m.deg_n) + "," + std::to_string(m.deg_lambda) + "):" + c.to_string();
  }
  return s + "}";
}

BiPoly BiPoly::parse(std::string_view text) {
  const auto fail = [&] { return ValidationError("malformed polynomial '" + std::string(text) + "'"); };
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.size() < 2 || compact.front() != '{' || compact.back() != '}') throw fail();
  std::string_view body(compact);
  body = body.substr(1, body.size() - 2);

  BiPoly out;
  while (!body.empty()) {
    if (body.front() != '(') throw fail();
    const auto comma = body.find(',');
    const auto close = body.find(')');
    if (comma == std::string_view::npos || close == std::string_view::npos || comma > close) throw fail();
    if (close + 1 >= body.size() || body[close + 1] != ':') throw fail();
    const auto end = body.find(',', close);
    const auto dn = BigRational::parse(body.substr(1, comma - 1));
    const auto dl = BigRational::parse(body.substr(comma + 1, close - comma - 1));
    if (!dn.is_integer() || !dl.is_integer() || dn.sign() < 0 || dl.sign() < 0) throw fail();
    const auto coeff = BigRational::parse(body.substr(close + 2, end == std::string_view::npos ? end : end - close - 2));
    out.add_term(Monomial{static_cast<unsigned>(std::stoul(dn.to_string())), static_cast<unsigned>(std::stoul(dl.to_string()))},
                 coeff);
    body = end == std::string_view::npos ? std::string_view{} : body.substr(end + 1);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.to_string(); }

}  // namespace lpt

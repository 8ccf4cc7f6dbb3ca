#include "lpt/harmonic.hpp"

#include <map>
#include <string>

#include "lpt/errors.hpp"

namespace lpt::harmonic {

DSequence d_sequence(int order) {
  if (order < 1) throw ValidationError("d_sequence: order must be >= 1");
  DSequence ds;
  ds.d.resize(static_cast<std::size_t>(order + 1));
  ds.d[1] = BiPoly::n();
  for (int k = 2; k <= order; ++k) {
    BiPoly acc = ds[k - 1] * BigRational(3 - 2 * k);
    for (int j = 1; j < k; ++j) acc += ds[j] * ds[k - j];
    ds.d[static_cast<std::size_t>(k)] = acc.scale_div(2);
  }
  return ds;
}

NodePolynomial reconstruct_polynomial(unsigned n, const DSequence& ds) {
  NodePolynomial p;
  p.sigma = static_cast<int>(n % 2);
  p.m0 = static_cast<int>(n / 2);
  if (ds.order() < p.m0 + 1) {
    throw ValidationError("reconstruct_polynomial: n = " + std::to_string(n) + " needs d_1..d_" +
                          std::to_string(p.m0 + 1));
  }
  const BigRational n_val(n);
  std::vector<BigRational> d_at(static_cast<std::size_t>(p.m0 + 2));
  for (int k = 1; k <= p.m0 + 1; ++k) d_at[static_cast<std::size_t>(k)] = ds[k].eval(n_val, 0);

  p.a.assign(static_cast<std::size_t>(p.m0 + 1), BigRational{});
  p.a[static_cast<std::size_t>(p.m0)] = 1;
  for (int m = p.m0 - 1; m >= 0; --m) {
    BigRational rest;
    for (int j = 2; j <= p.m0 - m + 1; ++j) {
      rest += d_at[static_cast<std::size_t>(j)] * p.a[static_cast<std::size_t>(m + j - 1)];
    }
    const BigRational lead(static_cast<long>(n) - 2 * m - p.sigma);
    if (lead.is_zero()) throw InternalError("reconstruct_polynomial: singular triangular system");
    p.a[static_cast<std::size_t>(m)] = -rest / lead;
  }
  return p;
}

std::optional<int> find_hermite_ratio_violation(unsigned n, const NodePolynomial& p) {
  if (2 * p.m0 + p.sigma != static_cast<int>(n) || p.a.size() != static_cast<std::size_t>(p.m0 + 1)) return 0;
  if (p.a.back().is_zero()) return p.m0;
  for (int m = 0; m < p.m0; ++m) {
    const BigRational ratio =
        BigRational((2 * m + p.sigma + 2) * (2 * m + p.sigma + 1)) / BigRational(4 * (p.m0 - m));
    if (p.a[static_cast<std::size_t>(m)] != -p.a[static_cast<std::size_t>(m + 1)] * ratio) return m;
  }
  return std::nullopt;
}

bool laurent_closure_check(unsigned n, const DSequence& ds, const NodePolynomial& p) {
  // Exponents shifted by 2K so every key is nonnegative.
  const int order = ds.order();
  const int shift = 2 * order;
  std::map<int, BigRational> residual;
  const BigRational n_val(n);
  for (int i = 0; i <= p.m0; ++i) {
    const BigRational& a = p.a[static_cast<std::size_t>(i)];
    const int power = 2 * i + p.sigma;
    if (power > 0) residual[power - 1 + shift] -= a * BigRational(power);
    for (int k = 1; k <= order; ++k) residual[power + 1 - 2 * k + shift] += a * ds[k].eval(n_val, 0);
  }
  const int lowest_free = static_cast<int>(n) - 2 * order - 1 + shift;
  for (const auto& [e, c] : residual) {
    if (e > lowest_free && !c.is_zero()) return false;
  }
  return true;
}

bool crosscheck_with_engine(const CTable& table, const DSequence& ds) {
  if (ds.order() < table.order()) return false;
  for (int k = 1; k <= table.order(); ++k) {
    if (!table.row_complete(k) || table.at(k, 0) != ds[k]) return false;
    for (int i = 1; i <= table.i_max(); ++i) {
      if (!table.at(k, i).is_zero()) return false;
    }
  }
  return true;
}

bool crosscheck_with_engine(int order) {
  const Expansion ex = expand(PotentialSpec{}, order);
  return crosscheck_with_engine(ex.table, d_sequence(order));
}

}  // namespace lpt::harmonic

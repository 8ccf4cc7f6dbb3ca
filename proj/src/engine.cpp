#include "lpt/engine.hpp"

#include <algorithm>
#include <string>

#include "lpt/errors.hpp"

namespace lpt {

BiPoly PotentialSpec::coupling(int i) const {
  auto it = couplings.find(i);
  return it == couplings.end() ? BiPoly{} : it->second;
}

bool PotentialSpec::is_even() const {
  return std::none_of(couplings.begin(), couplings.end(),
                      [](const auto& entry) { return entry.first % 2 != 0 && !entry.second.is_zero(); });
}

bool PotentialSpec::kills_even_orders() const {
  return std::none_of(couplings.begin(), couplings.end(),
                      [](const auto& entry) { return entry.first % 4 != 0 && !entry.second.is_zero(); });
}

PotentialSpec validate_potential(PotentialSpec raw) {
  if (raw.omega.sign() <= 0) {
    throw ValidationError("omega must be > 0: the potential needs a simple quadratic minimum at x = 0 (got omega = " +
                          raw.omega.to_string() + ")");
  }
  if (raw.mass.sign() <= 0) throw ValidationError("mass m must be > 0 (got m = " + raw.mass.to_string() + ")");
  for (auto it = raw.couplings.begin(); it != raw.couplings.end();) {
    const auto& [i, f] = *it;
    if (i < 1) {
      throw ValidationError("coupling index i = " + std::to_string(i) +
                            " is invalid: anharmonic terms f_i x^(i+2) need i >= 1");
    }
    if (!f.is_lambda_only()) {
      throw ValidationError("coupling f_" + std::to_string(i) + " = " + f.to_string() +
                            " depends on n; couplings must be polynomials in lambda only");
    }
    it = f.is_zero() ? raw.couplings.erase(it) : std::next(it);
  }
  return raw;
}

CTable::CTable(int order, int i_max)
    : order_(order),
      i_max_(i_max),
      rows_(static_cast<std::size_t>(order + 1), std::vector<BiPoly>(static_cast<std::size_t>(i_max + 1))),
      filled_(static_cast<std::size_t>(order + 1), 0) {
  if (order < 0 || i_max < 0) throw ValidationError("CTable: order and i_max must be nonnegative");
}

const BiPoly& CTable::at(int k, int i) const {
  if (k < 0 || k > order_ || i < 0 || i >= filled(k)) {
    throw InternalError("CTable: slot C[" + std::to_string(k) + "][" + std::to_string(i) + "] read before it was filled");
  }
  return rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
}

BiPoly& CTable::at(int k, int i) {
  return const_cast<BiPoly&>(static_cast<const CTable&>(*this).at(k, i));
}

void CTable::push(int k, BiPoly value) {
  if (k < 0 || k > order_) throw InternalError("CTable: row " + std::to_string(k) + " out of range");
  auto& count = filled_[static_cast<std::size_t>(k)];
  if (count > i_max_) throw InternalError("CTable: row " + std::to_string(k) + " already full");
  rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(count)] = std::move(value);
  ++count;
}

std::vector<BiPoly> c0_row(const PotentialSpec& spec, int i_max) {
  if (i_max < 0) throw ValidationError("c0_row: i_max must be >= 0");
  const BigRational two_m = 2 * spec.mass;
  const BigRational divisor = two_m * spec.omega;

  std::vector<BiPoly> row;
  row.reserve(static_cast<std::size_t>(i_max + 1));
  row.emplace_back(-(spec.mass * spec.omega));
  for (int i = 1; i <= i_max; ++i) {
    BiPoly acc;
    for (int p = 1; p < i; ++p) acc += row[static_cast<std::size_t>(p)] * row[static_cast<std::size_t>(i - p)];
    acc -= spec.coupling(i) * two_m;
    row.push_back(acc.scale_div(divisor));
  }
  return row;
}

void laurent_row(int k, CTable& table, const PotentialSpec& spec, const ExpandOptions& options) {
  if (k < 1 || k > table.order()) throw InternalError("laurent_row: row " + std::to_string(k) + " out of range");
  for (int j = 0; j < k; ++j) {
    if (!table.row_complete(j)) {
      throw InternalError("laurent_row: row " + std::to_string(k) + " requested before row " + std::to_string(j) +
                          " was complete");
    }
  }
  if (table.filled(k) != 0) throw InternalError("laurent_row: row " + std::to_string(k) + " already started");

  const bool skip_odd = options.parity_shortcut && spec.is_even();
  const BigRational c00 = -(spec.mass * spec.omega);
  const BigRational divisor = -2 * c00;
  const int residue_slot = 2 * k - 2;

  for (int i = 0; i <= table.i_max(); ++i) {
    if (i == residue_slot) {
      table.push(k, k == 1 ? BiPoly::n() : BiPoly{});
      continue;
    }
    if (skip_odd && i % 2 != 0) {
      table.push(k, BiPoly{});
      continue;
    }
    BiPoly acc = table.at(k - 1, i) * BigRational(3 - 2 * k + i);
    for (int j = 1; j < k; ++j) {
      for (int p = 0; p <= i; ++p) acc += table.at(j, p) * table.at(k - j, i - p);
    }
    BiPoly same_row;
    for (int p = 1; p <= i; ++p) same_row += table.at(0, p) * table.at(k, i - p);
    acc += same_row * BigRational(2);
    table.push(k, acc.scale_div(divisor));
  }
}

namespace {

// sum_{j=0}^{k} sum_{p=0}^{i} C^j_p C^{k-j}_{i-p}
BiPoly convolution(const CTable& table, int k, int i) {
  BiPoly acc;
  for (int j = 0; j <= k; ++j) {
    for (int p = 0; p <= i; ++p) acc += table.at(j, p) * table.at(k - j, i - p);
  }
  return acc;
}

}  // namespace

BiPoly energy_coefficient(int k, const CTable& table, const PotentialSpec& spec) {
  if (k < 1 || k > table.order()) throw InternalError("energy_coefficient: order " + std::to_string(k) + " out of range");
  const int slot = 2 * k - 2;
  for (int j = 0; j <= k; ++j) {
    if (table.filled(j) <= slot) {
      throw InternalError("energy_coefficient: E_" + std::to_string(k) + " needs row " + std::to_string(j) +
                          " through index " + std::to_string(slot));
    }
  }
  BiPoly acc = table.at(k - 1, slot) + convolution(table, k, slot);
  return (-acc).scale_div(2 * spec.mass);
}

Expansion expand(const PotentialSpec& raw, int order, const ExpandOptions& options) {
  if (order < 1) throw ValidationError("expansion order must be >= 1 (got " + std::to_string(order) + ")");
  PotentialSpec spec = validate_potential(raw);
  const int i_max = std::max(2 * order - 2, 0);

  Expansion out{CTable(order, i_max), EnergySeries{order, {}, spec}};
  for (auto& c : c0_row(spec, i_max)) out.table.push(0, std::move(c));
  out.series.coefficients.emplace_back();
  for (int k = 1; k <= order; ++k) {
    laurent_row(k, out.table, spec, options);
    out.series.coefficients.push_back(energy_coefficient(k, out.table, spec));
  }
  return out;
}

std::optional<IdentityViolation> find_power_identity_violation(const CTable& table, const EnergySeries& series,
                                                               const PotentialSpec& spec) {
  if (series.order != table.order()) throw InternalError("power identity: table and series orders differ");
  for (int k = 1; k <= table.order(); ++k) {
    for (int i = 0; i <= table.i_max(); ++i) {
      BiPoly lhs = table.at(k - 1, i) * BigRational(3 - 2 * k + i) + convolution(table, k, i);
      BiPoly rhs = i == 2 * k - 2 ? series[k] * (-2 * spec.mass) : BiPoly{};
      if (lhs != rhs) return IdentityViolation{k, i};
    }
  }
  return std::nullopt;
}

PartialSum evaluate_energy(const EnergySeries& series, unsigned n_val, const BigRational& lambda_val,
                           const BigRational& hbar_val, int truncate_at) {
  if (truncate_at < 1 || truncate_at > series.order) {
    throw ValidationError("truncation order " + std::to_string(truncate_at) + " outside 1.." +
                          std::to_string(series.order));
  }
  PartialSum out;
  const BigRational n(n_val);
  for (int k = 1; k <= truncate_at; ++k) {
    out.terms.push_back(series[k].eval(n, lambda_val) * hbar_val.pow(static_cast<unsigned>(k)));
    out.sum += out.terms.back();
  }
  return out;
}

}  // namespace lpt

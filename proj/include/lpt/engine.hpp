#pragma once

// Logarithmic perturbation theory in powers of hbar.
//
// The logarithmic derivative C(x) = hbar U'(x)/U(x) of the bound state is
// expanded as C = sum_k C_k(x) hbar^k with C_0(x) = x sum_i C^0_i x^i and
// C_k(x) = x^(1-2k) sum_i C^k_i x^i for k >= 1. Matching powers of x in the
// Riccati equation hbar C' + C^2 = 2m(V - E) yields a triangular recursion
// for the coefficients C^k_i; the node count n of the state enters only
// through the residue condition C^k_(2k-2) = n * [k == 1]. Energies E_k are
// read off the same power-matching identity at i = 2k-2.

#include <map>
#include <optional>
#include <vector>

#include "lpt/bipoly.hpp"
#include "lpt/rational.hpp"

namespace lpt {

/// V(x) = m omega^2 x^2 / 2 + sum_{i>=1} f_i x^(i+2), with each f_i a
/// polynomial in lambda.
struct PotentialSpec {
  BigRational mass{1};
  BigRational omega{1};
  std::map<int, BiPoly> couplings;  ///< i -> f_i, the coefficient of x^(i+2)

  [[nodiscard]] int max_index() const { return couplings.empty() ? 0 : couplings.rbegin()->first; }
  [[nodiscard]] BiPoly coupling(int i) const;
  /// No odd-index couplings, so V(-x) = V(x).
  [[nodiscard]] bool is_even() const;
  /// E_k is homogeneous of weight 2k-2 in the couplings (f_i has weight i), so
  /// when every index is a multiple of 4 the even orders k >= 2 vanish.
  [[nodiscard]] bool kills_even_orders() const;

  friend bool operator==(const PotentialSpec&, const PotentialSpec&) = default;
};

/// Checks m > 0, omega > 0, i >= 1 and that no f_i mentions n. Explicit zero
/// couplings are dropped. Throws ValidationError.
PotentialSpec validate_potential(PotentialSpec raw);

/// Triangular table of Laurent coefficients C[k][i], k = 0..order,
/// i = 0..i_max. Rows are filled left to right; reading an unfilled slot is
/// an InternalError.
class CTable {
 public:
  CTable(int order, int i_max);

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] int i_max() const { return i_max_; }

  [[nodiscard]] const BiPoly& at(int k, int i) const;
  /// Mutable access to an already filled slot.
  BiPoly& at(int k, int i);
  [[nodiscard]] int filled(int k) const { return filled_.at(static_cast<std::size_t>(k)); }
  [[nodiscard]] bool row_complete(int k) const { return filled(k) == i_max_ + 1; }

  /// Appends the next slot of row k.
  void push(int k, BiPoly value);

  friend bool operator==(const CTable&, const CTable&) = default;

 private:
  int order_;
  int i_max_;
  std::vector<std::vector<BiPoly>> rows_;
  std::vector<int> filled_;
};

/// Energy coefficients E_1..E_K of E = sum_k E_k hbar^k (E_0 = 0).
struct EnergySeries {
  int order = 0;
  std::vector<BiPoly> coefficients;  ///< index k; coefficients[0] is E_0 = 0
  PotentialSpec potential;

  [[nodiscard]] const BiPoly& operator[](int k) const { return coefficients.at(static_cast<std::size_t>(k)); }
};

struct ExpandOptions {
  /// For even potentials, write zeros into odd-i slots instead of running
  /// the recursion there. Ignored for potentials that are not even.
  bool parity_shortcut = false;
};

/// C^0_0..C^0_{i_max} of C_0(x) = -x sqrt(2mV(x)) / x.
std::vector<BiPoly> c0_row(const PotentialSpec& spec, int i_max);

/// Fills row k (k >= 1) of the table. Rows 0..k-1 must be complete and row
/// k empty. The residue slot i = 2k-2 is set to n for k = 1 and 0 otherwise.
void laurent_row(int k, CTable& table, const PotentialSpec& spec, const ExpandOptions& options = {});

/// E_k from the power-matching identity at i = 2k-2. Needs rows 0..k filled
/// through index 2k-2.
BiPoly energy_coefficient(int k, const CTable& table, const PotentialSpec& spec);

struct Expansion {
  CTable table;
  EnergySeries series;
};

/// Full expansion to order K >= 1 with i_max = max(2K-2, 0).
Expansion expand(const PotentialSpec& spec, int order, const ExpandOptions& options = {});

struct IdentityViolation {
  int k;
  int i;
};

/// First (k, i) at which
///   (3-2k+i) C^{k-1}_i + sum_{j=0}^{k} sum_{p=0}^{i} C^j_p C^{k-j}_{i-p} = -2m E_k [i == 2k-2]
/// fails, scanning k = 1..K and i = 0..i_max.
std::optional<IdentityViolation> find_power_identity_violation(const CTable& table, const EnergySeries& series,
                                                               const PotentialSpec& spec);

inline bool verify_power_identity(const CTable& table, const EnergySeries& series, const PotentialSpec& spec) {
  return !find_power_identity_violation(table, series, spec).has_value();
}

struct PartialSum {
  BigRational sum;
  std::vector<BigRational> terms;  ///< terms[k-1] = E_k(n, lambda) hbar^k
};

/// Exact sum_{k=1}^{truncate_at} E_k(n, lambda) hbar^k.
/// Throws ValidationError unless 1 <= truncate_at <= series.order.
PartialSum evaluate_energy(const EnergySeries& series, unsigned n_val, const BigRational& lambda_val,
                           const BigRational& hbar_val, int truncate_at);

}  // namespace lpt

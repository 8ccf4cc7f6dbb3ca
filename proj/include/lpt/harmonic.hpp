#pragma once

// Exactly solvable limit hbar = m = omega = 1, V = x^2/2. There C_0 = -x and
// C_k = d_k x^(1-2k), and the node factor P_n of the eigenfunction obeys
// P_n'/P_n = sum_k d_k x^(1-2k) as a large-x expansion.

#include <optional>
#include <vector>

#include "lpt/bipoly.hpp"
#include "lpt/engine.hpp"

namespace lpt::harmonic {

/// d[k] for k = 1..K as polynomials in n; d[0] is unused and zero.
struct DSequence {
  std::vector<BiPoly> d;

  [[nodiscard]] int order() const { return static_cast<int>(d.size()) - 1; }
  [[nodiscard]] const BiPoly& operator[](int k) const { return d.at(static_cast<std::size_t>(k)); }
};

/// P_n(x) = x^sigma sum_{i=0}^{m0} a_i x^(2i), n = 2 m0 + sigma, a_{m0} = 1.
struct NodePolynomial {
  int sigma = 0;
  int m0 = 0;
  std::vector<BigRational> a;

  friend bool operator==(const NodePolynomial&, const NodePolynomial&) = default;
};

/// d_1 = n, 2 d_k = (3-2k) d_{k-1} + sum_{j=1}^{k-1} d_j d_{k-j}.
DSequence d_sequence(int order);

/// Back-substitutes
///   (n - 2m - sigma) a_m + d_2 a_{m+1} + ... + d_{m0-m+1} a_{m0} = 0
/// from m = m0-1 down to 0 with d_k evaluated at the given n.
/// Throws ValidationError if ds is shorter than m0 + 1.
NodePolynomial reconstruct_polynomial(unsigned n, const DSequence& ds);

/// First m at which a_m != -a_{m+1} (2m+sigma+2)(2m+sigma+1) / (4(m0-m)),
/// or nullopt when the whole chain matches the Hermite recurrence.
std::optional<int> find_hermite_ratio_violation(unsigned n, const NodePolynomial& p);

inline bool hermite_ratio_check(unsigned n, const NodePolynomial& p) {
  return !find_hermite_ratio_violation(n, p).has_value();
}

/// True iff P(x) sum_{k=1}^{K} d_k x^(1-2k) - P'(x) has no term of degree
/// above n - 2K - 1, i.e. d_1..d_K are the leading large-x Laurent
/// coefficients of P'/P. K = ds.order().
bool laurent_closure_check(unsigned n, const DSequence& ds, const NodePolynomial& p);

/// True iff C[k][0] = d_k and C[k][i] = 0 for i >= 1, k = 1..table.order().
bool crosscheck_with_engine(const CTable& table, const DSequence& ds);

/// Runs the engine on the unit harmonic oscillator and compares with d_sequence.
bool crosscheck_with_engine(int order);

}  // namespace lpt::harmonic

#ifndef QSUM_EPS_SERIES_HPP
#define QSUM_EPS_SERIES_HPP

#include <vector>

#include "qsum/ratfunc.hpp"

namespace qsum {

/// Truncated Laurent series in e (q = 1 + e):
///   sum_{i} coeffs[i] * e^(min_degree + i)  +  O(e^truncation_order).
struct EpsSeries {
  int min_degree = 0;
  std::vector<Rational> coeffs;
  int truncation_order = 1;

  bool is_zero() const;
  /// Coefficient of e^exponent; throws InsufficientPrecision at or beyond
  /// the truncation order.
  Rational coeff(int exponent) const;

  friend bool operator==(const EpsSeries&, const EpsSeries&) = default;
};

/// Product known up to min(a.trunc + b.min, b.trunc + a.min).
EpsSeries operator*(const EpsSeries& a, const EpsSeries& b);

/// Laurent expansion of f under q = 1 + e, L = log(1 + e). Returns exactly
/// n_terms coefficients starting at the valuation of f (or at e^0 when f is
/// zero).
EpsSeries eps_expand(const RatFunc& f, unsigned n_terms);

/// lim_{q -> 1} f along real q. Throws PoleAtOne when f diverges there.
Rational limit_q1(const RatFunc& f);

}  // namespace qsum

#endif  // QSUM_EPS_SERIES_HPP

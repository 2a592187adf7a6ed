#ifndef QSUM_Q_BERNOULLI_HPP
#define QSUM_Q_BERNOULLI_HPP

#include <vector>

#include "qsum/identity.hpp"
#include "qsum/ratfunc.hpp"

namespace qsum {

enum class BernoulliMethod { Recursion, Series };

struct BernoulliTable {
  unsigned max_index = 0;
  std::vector<RatFunc> values;  // B_{0,q} .. B_{max_index,q}
  BernoulliMethod method = BernoulliMethod::Recursion;

  const RatFunc& operator[](unsigned n) const { return values.at(n); }
};

/// B_{0,q} = L/(q-1) and, for k >= 1,
///   B_{k,q} = (delta_{k,1} - q sum_{i<k} C(k,i) B_{i,q}) / (q-1).
BernoulliTable bern_recursion(unsigned n_max);

/// n! times the t^n coefficient of (t + L)/(q e^t - 1), by exact power-series
/// inversion over rational-function coefficients.
BernoulliTable bern_series(unsigned n_max);

/// B_{n,q}(x) = sum_j C(n,j) B_{j,q} x^{n-j}. coeffs[j] multiplies x^{n-j}.
struct QBernPoly {
  unsigned degree = 0;
  std::vector<RatFunc> coeffs;
};

QBernPoly bern_poly(unsigned n);
QBernPoly bern_poly(unsigned n, const BernoulliTable& table);
RatFunc bern_poly_eval(const QBernPoly& p, const Rational& x0);

/// q sum_{i<=k} C(k,i) B_{i,q} - B_{k,q} against delta_{k,1}; k >= 1.
IdentityCheck verify_recursion_identity(unsigned k, const BernoulliTable& table);

/// Polynomial in x with rational-function coefficients, coeffs[i] * x^i.
struct XPoly {
  std::vector<RatFunc> coeffs;
  friend bool operator==(const XPoly&, const XPoly&) = default;
};

struct DistributionCheck {
  XPoly lhs;  // B_{n,q}(x)
  XPoly rhs;  // m^{n-1} sum_{i<m} q^i B_{n,q^m}((x+i)/m)
  bool holds() const { return lhs == rhs; }
};

/// n >= 0, m >= 1.
DistributionCheck verify_distribution(unsigned n, unsigned m);

// Both sides of the q-power-sum / q-Bernoulli polynomial identity at (l, k),
// l >= 1, k >= 2. The "printed" forms take the left side
//   q^{-k} S_{l-1,q}(k) + q^{-k} L S_{l,q}(k)
// which matches (B_{l,q}(k) - q^{-k} B_{l,q}) / l only for l = 1. Expanding
// the generating function gives
//   B_{l,q}(k) - q^{-k} B_{l,q} = l q^{-k} S_{l-1,q}(k) + q^{-k} L S_{l,q}(k),
// which is what the "corrected" forms check (left side divided by l).
IdentityCheck verify_thmB(unsigned l, unsigned k);
IdentityCheck verify_thmB_corrected(unsigned l, unsigned k);
/// Right side written as (1/l) sum_{i<l} C(l,i) B_{i,q} k^{l-i}
///                       + (1 - q^{-k}) B_{l,q} / l.
IdentityCheck verify_thmB_intro_form(unsigned l, unsigned k);
IdentityCheck verify_thmB_intro_form_corrected(unsigned l, unsigned k);

IdentityCheck verify_thmB(unsigned l, unsigned k, const BernoulliTable& table);
IdentityCheck verify_thmB_corrected(unsigned l, unsigned k,
                                    const BernoulliTable& table);
IdentityCheck verify_thmB_intro_form(unsigned l, unsigned k,
                                     const BernoulliTable& table);
IdentityCheck verify_thmB_intro_form_corrected(unsigned l, unsigned k,
                                               const BernoulliTable& table);

/// Classical Bernoulli numbers B_0..B_{n_max} as q -> 1 limits of B_{n,q}.
std::vector<Rational> classical_bernoulli_limits(unsigned n_max);

struct ClassicalCheck {
  Rational lhs;  // lim_{q->1} of the q-power-sum side, i.e. S_{l-1}(k)
  Rational rhs;  // (B_l(k) - B_l(0)) / l with B_j the limits above
  bool holds() const { return lhs == rhs; }
};

/// The q -> 1 shadow of the identity above: S_{l-1}(k) = (B_l(k) - B_l(0))/l.
ClassicalCheck verify_thmB_classical(unsigned l, unsigned k);

}  // namespace qsum

#endif  // QSUM_Q_BERNOULLI_HPP

#ifndef QSUM_GEN_FUNCTION_HPP
#define QSUM_GEN_FUNCTION_HPP

#include <complex>
#include <vector>

namespace qsum {

using Complex = std::complex<double>;

/// Evaluation point for the generating function. validate() enforces
/// |q0| < 1, |t0| < 2 pi and |q0 e^{Re t0}| < 1.
struct GfPoint {
  Complex q0{0.5, 0.0};
  Complex t0{0.0, 0.0};
  double x0 = 0.0;
  unsigned n_terms = 1;
  double tolerance = 1e-9;

  void validate() const;
};

/// (log q0 + t0) / (q0 e^{t0} - 1) * e^{x0 t0}, principal log.
/// Throws PoleAtPoint when q0 e^{t0} is within machine tolerance of 1.
Complex gf_closed(const GfPoint& p);

/// -(t0 + log q0) * sum_{n < n_terms} e^{(n + x0) t0} q0^n.
Complex gf_partial_sum(const GfPoint& p);

/// |t0 + log q0| e^{x0 Re t0} r^{n_terms} / (1 - r) with r = |q0 e^{t0}|:
/// a bound on |gf_partial_sum - gf_closed| in exact arithmetic.
double gf_truncation_bound(const GfPoint& p);

struct TaylorEntry {
  unsigned n = 0;
  double step = 0.0;           // best step from the sweep
  double finite_difference = 0.0;
  double exact = 0.0;          // B_{n,q}(q0) from the exact table
  double rel_error = 0.0;
};

struct TaylorReport {
  double q0 = 0.0;
  double tolerance = 0.0;
  std::vector<TaylorEntry> entries;
  double max_rel_error = 0.0;

  bool passed() const { return max_rel_error < tolerance; }
};

/// Compares n-th t-derivatives of the closed generating function at t = 0
/// (order-4 central differences, steps 1e-1, 1e-2, 1e-3) with B_{n,q}
/// evaluated at q0, for n = 0..n_max. Requires 0 < q0 < 1, n_max <= 10.
TaylorReport gf_taylor_check(double q0, unsigned n_max, double tolerance);

/// Weights w[j] such that sum_j w[j] f(x0 + offsets[j]) approximates f^(d)(x0).
std::vector<double> finite_difference_weights(unsigned derivative,
                                              const std::vector<double>& offsets);

}  // namespace qsum

#endif  // QSUM_GEN_FUNCTION_HPP

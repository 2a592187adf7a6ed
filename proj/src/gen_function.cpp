#include "qsum/gen_function.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qsum/error.hpp"
#include "qsum/numeric_eval.hpp"
#include "qsum/q_bernoulli.hpp"

namespace qsum {

void GfPoint::validate() const {
  if (!(std::abs(q0) < 1.0) || std::abs(q0) == 0.0) {
    throw Error(ErrorCode::InvalidArgument, "need 0 < |q0| < 1");
  }
  if (!(std::abs(t0) < 2.0 * std::numbers::pi)) {
    throw Error(ErrorCode::InvalidArgument, "need |t0| < 2 pi");
  }
  if (!(std::abs(q0) * std::exp(t0.real()) < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "need |q0 e^t0| < 1 for the geometric series");
  }
  if (n_terms == 0) throw Error(ErrorCode::InvalidArgument, "need at least one term");
  if (!(tolerance > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
}

Complex gf_closed(const GfPoint& p) {
  const Complex den = p.q0 * std::exp(p.t0) - 1.0;
  if (std::abs(den) <= 8.0 * std::numeric_limits<double>::epsilon()) {
    throw Error(ErrorCode::PoleAtPoint, "q0 e^t0 = 1");
  }
  return (std::log(p.q0) + p.t0) / den * std::exp(p.x0 * p.t0);
}

Complex gf_partial_sum(const GfPoint& p) {
  p.validate();
  // e^{(n + x0) t0} q0^n = e^{x0 t0} (q0 e^{t0})^n
  const Complex ratio = p.q0 * std::exp(p.t0);
  Complex power = std::exp(p.x0 * p.t0);
  Complex sum{0.0, 0.0};
  for (unsigned n = 0; n < p.n_terms; ++n) {
    sum += power;
    power *= ratio;
  }
  return -(p.t0 + std::log(p.q0)) * sum;
}

double gf_truncation_bound(const GfPoint& p) {
  p.validate();
  const double r = std::abs(p.q0 * std::exp(p.t0));
  return std::abs(p.t0 + std::log(p.q0)) * std::exp(p.x0 * p.t0.real()) *
         std::pow(r, static_cast<double>(p.n_terms)) / (1.0 - r);
}

std::vector<double> finite_difference_weights(unsigned derivative,
                                              const std::vector<double>& offsets) {
  // Fornberg's recursion for weights on an arbitrary grid, evaluated at 0.
  const std::size_t n = offsets.size();
  const std::size_t m = derivative;
  if (n <= m) throw Error(ErrorCode::InvalidArgument, "stencil too small for derivative order");
  std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0;
  double c4 = offsets[0];
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = offsets[i];
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = offsets[i] - offsets[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k >= 1; --k) {
          c[i][k] = c1 * (static_cast<double>(k) * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (std::size_t k = mn; k >= 1; --k) {
        c[j][k] = (c4 * c[j][k] - static_cast<double>(k) * c[j][k - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> weights(n);
  for (std::size_t i = 0; i < n; ++i) weights[i] = c[i][m];
  return weights;
}

TaylorReport gf_taylor_check(double q0, unsigned n_max, double tolerance) {
  if (!(q0 > 0.0 && q0 < 1.0)) throw Error(ErrorCode::InvalidArgument, "need 0 < q0 < 1");
  if (n_max > 10) throw Error(ErrorCode::InvalidArgument, "n_max must be <= 10");

  const BernoulliTable table = bern_recursion(n_max);
  const auto f = [q0](double t) {
    return gf_closed(GfPoint{Complex(q0, 0.0), Complex(t, 0.0), 0.0, 1, 1.0}).real();
  };
  constexpr double kSteps[] = {1e-1, 1e-2, 1e-3};

  TaylorReport report;
  report.q0 = q0;
  report.tolerance = tolerance;
  for (unsigned n = 0; n <= n_max; ++n) {
    TaylorEntry entry;
    entry.n = n;
    entry.exact = rf_eval_numeric(table[n], q0, 0.0, 30).re.to_double();
    entry.rel_error = std::numeric_limits<double>::infinity();
    // Central stencil of accuracy order 4: half-width floor((n+1)/2) + 1.
    const int half = n == 0 ? 0 : static_cast<int>((n + 1) / 2) + 1;
    for (double h : kSteps) {
      std::vector<double> offsets;
      for (int i = -half; i <= half; ++i) offsets.push_back(i * h);
      const auto w = finite_difference_weights(n, offsets);
      double value = 0.0;
      for (std::size_t i = 0; i < offsets.size(); ++i) value += w[i] * f(offsets[i]);
      const double err = std::abs(value - entry.exact) / std::abs(entry.exact);
      if (err < entry.rel_error) {
        entry.rel_error = err;
        entry.step = h;
        entry.finite_difference = value;
      }
    }
    report.max_rel_error = std::max(report.max_rel_error, entry.rel_error);
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace qsum

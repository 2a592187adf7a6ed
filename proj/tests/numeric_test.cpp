#include <gtest/gtest.h>

#include <cmath>

#include "qsum/error.hpp"
#include "qsum/gen_function.hpp"

namespace qsum {
namespace {

GfPoint point(Complex q0, Complex t0, double x0, unsigned n_terms) {
  GfPoint p;
  p.q0 = q0;
  p.t0 = t0;
  p.x0 = x0;
  p.n_terms = n_terms;
  return p;
}

TEST(GeneratingFunction, ClosedFormExamples) {
  EXPECT_NEAR(gf_closed(point(0.5, 0.0, 0.0, 1)).real(), std::log(0.5) / -0.5, 1e-15);
  const Complex v = gf_closed(point(0.5, 0.1, 0.0, 1));
  EXPECT_NEAR(v.real(), 1.3257, 1e-4);
  // independent evaluation of (t + log q) e^{xt} / (q e^t - 1)
  const double t = 0.1, q = 0.5;
  EXPECT_NEAR(v.real(), (t + std::log(q)) / (q * std::exp(t) - 1.0), 1e-15);
  EXPECT_NEAR(v.imag(), 0.0, 1e-18);
}

TEST(GeneratingFunction, PoleIsReported) {
  try {
    gf_closed(point(1.0, 0.0, 0.0, 1));
    FAIL() << "expected a pole";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PoleAtPoint);
  }
}

TEST(GeneratingFunction, PartialSumExamples) {
  EXPECT_NEAR(gf_partial_sum(point(0.5, 0.0, 0.0, 1)).real(), -std::log(0.5), 1e-15);
  for (const GfPoint& p : {point(0.5, 0.1, 0.0, 200), point(0.3, -0.2, 1.0, 100)}) {
    EXPECT_LT(std::abs(gf_partial_sum(p) - gf_closed(p)), 1e-9);
    EXPECT_LT(gf_truncation_bound(p), 1e-40);
  }
}

TEST(GeneratingFunction, ErrorWithinBoundPlusRoundoff) {
  const Complex qs[] = {{0.5, 0.0}, {0.3, 0.2}, {-0.4, 0.1}, {0.7, 0.0}};
  const Complex ts[] = {{0.1, 0.0}, {-0.2, 0.3}, {0.0, 0.0}};
  for (const auto& q : qs) {
    for (const auto& t : ts) {
      for (unsigned n : {5u, 20u, 80u}) {
        const GfPoint p = point(q, t, 0.5, n);
        const Complex closed = gf_closed(p);
        const double err = std::abs(gf_partial_sum(p) - closed);
        const double ulps = 10 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(closed));
        EXPECT_LE(err, gf_truncation_bound(p) + ulps * n) << q << " " << t << " " << n;
      }
    }
  }
}

TEST(GeneratingFunction, ErrorShrinksWithMoreTerms) {
  double previous = INFINITY;
  for (unsigned n = 1; n <= 40; ++n) {
    const GfPoint p = point(0.5, 0.1, 0.0, n);
    const double err = std::abs(gf_partial_sum(p) - gf_closed(p));
    if (gf_truncation_bound(p) > 1e-13) EXPECT_LE(err, previous) << n;
    previous = err;
  }
}

TEST(GeneratingFunction, RejectsDivergentPoints) {
  EXPECT_THROW(gf_partial_sum(point(1.2, 0.0, 0.0, 10)), Error);
  EXPECT_THROW(gf_partial_sum(point(0.9, 0.5, 0.0, 10)), Error);  // |q e^t| > 1
  EXPECT_THROW(gf_partial_sum(point(0.5, 7.0, 0.0, 10)), Error);  // |t| >= 2 pi
  EXPECT_THROW(gf_partial_sum(point(0.5, 0.0, 0.0, 0)), Error);
}

TEST(FiniteDifference, WeightsReproduceKnownStencils) {
  const auto w = finite_difference_weights(1, {-1.0, 0.0, 1.0});
  ASSERT_EQ(w.size(), 3u);
  EXPECT_NEAR(w[0], -0.5, 1e-15);
  EXPECT_NEAR(w[1], 0.0, 1e-15);
  EXPECT_NEAR(w[2], 0.5, 1e-15);
  const auto w2 = finite_difference_weights(2, {-2.0, -1.0, 0.0, 1.0, 2.0});
  const double expect[] = {-1.0 / 12, 4.0 / 3, -5.0 / 2, 4.0 / 3, -1.0 / 12};
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(w2[i], expect[i], 1e-14);
}

TEST(TaylorCheck, Examples) {
  const TaylorReport r = gf_taylor_check(0.5, 4, 1e-5);
  ASSERT_EQ(r.entries.size(), 5u);
  EXPECT_NEAR(r.entries[0].exact, std::log(0.5) / -0.5, 1e-12);
  const double q0 = 0.5;
  EXPECT_NEAR(r.entries[1].exact, 1 / (q0 - 1) - q0 * std::log(q0) / ((q0 - 1) * (q0 - 1)), 1e-12);
  EXPECT_TRUE(r.passed());
  EXPECT_LT(r.max_rel_error, 1e-5);
}

TEST(TaylorCheck, PassesAtAllSamplePoints) {
  for (double q0 : {0.3, 0.5, 0.7}) {
    const TaylorReport r = gf_taylor_check(q0, 4, 1e-5);
    EXPECT_TRUE(r.passed()) << q0 << " " << r.max_rel_error;
  }
}

}  // namespace
}  // namespace qsum

#include <gtest/gtest.h>

#include <array>

#include "qsum/error.hpp"
#include "qsum/power_sums.hpp"
#include "qsum/text_format.hpp"

namespace qsum {
namespace {

QPoly poly(const char* text) { return parse_ratfunc(text).as_qpoly(); }

Integer int_pow(unsigned base, unsigned e) {
  Integer out = 1;
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

TEST(QInteger, Examples) {
  EXPECT_EQ(q_integer(0), QPoly());
  EXPECT_EQ(q_integer(1), QPoly(1));
  EXPECT_EQ(q_integer(3), poly("1 + q + q^2"));
}

TEST(PowerSum, DirectExamples) {
  EXPECT_EQ(s_direct(0, 1), QPoly(1));
  EXPECT_EQ(s_direct(2, 2), QPoly::q());
  EXPECT_EQ(s_direct(1, 3), poly("q + 2*q^2"));
  EXPECT_EQ(render_text(s_direct(1, 3)), "q + 2*q^2");
  EXPECT_EQ(s_direct(0, 4), q_integer(4));
  EXPECT_EQ(s_direct(3, 0), QPoly());
}

TEST(PowerSum, ClosedFormExamples) {
  EXPECT_EQ(s_closed_1(3), RatFunc(poly("q + 2*q^2")));
  EXPECT_TRUE(s_closed_1(1).is_zero());
  EXPECT_EQ(s_closed_1(2), RatFunc::q());
  EXPECT_EQ(s_closed_2(2), RatFunc::q());
  EXPECT_EQ(s_closed_3(2), RatFunc::q());
  EXPECT_TRUE(s_closed_2(1).is_zero());
}

TEST(PowerSum, RecurrenceExamples) {
  EXPECT_EQ(s_recurrence(0, 3), poly("1 + q + q^2"));
  EXPECT_EQ(s_recurrence(1, 3), poly("q + 2*q^2"));
  EXPECT_EQ(s_recurrence(2, 2), QPoly::q());
}

TEST(PowerSum, OraclesAgreeOnGrid) {
  for (unsigned n = 0; n <= 10; ++n) {
    for (unsigned k = 0; k <= 10; ++k) {
      EXPECT_EQ(s_recurrence(n, k), s_direct(n, k)) << n << "," << k;
    }
  }
  for (unsigned k = 0; k <= 10; ++k) {
    const std::array<RatFunc, 3> closed{s_closed_1(k), s_closed_2(k), s_closed_3(k)};
    for (unsigned n = 1; n <= 3; ++n) {
      EXPECT_TRUE(closed[n - 1].is_polynomial()) << n << "," << k;
      EXPECT_EQ(closed[n - 1], RatFunc(s_direct(n, k))) << n << "," << k;
    }
  }
}

TEST(PowerSum, CoefficientsAreIntegerPowers) {
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned k = 1; k <= 8; ++k) {
      const QPoly s = s_direct(n, k);
      Integer at_one = 0;
      for (unsigned l = 0; l < k; ++l) {
        EXPECT_EQ(s.coeff(l), Rational(int_pow(l, n)));  // int_pow(0, 0) = 1
        at_one += int_pow(l, n);
      }
      EXPECT_EQ(s.evaluate(1), Rational(at_one));
      EXPECT_EQ(s_classical_limit(n, k), Rational(at_one));
    }
  }
}

TEST(PowerSum, ClassicalLimitExamples) {
  EXPECT_EQ(s_classical_limit(1, 4), Rational(6));
  EXPECT_EQ(s_classical_limit(0, 5), Rational(5));
  EXPECT_EQ(s_classical_limit(3, 3), Rational(9));
}

TEST(MasterRecurrence, Holds) {
  const IdentityCheck c = verify_master_recurrence(1, 2);
  EXPECT_TRUE(c.holds());
  EXPECT_EQ(c.lhs, RatFunc(poly("4*q^2")));
  EXPECT_TRUE(verify_master_recurrence(0, 2).holds());
  EXPECT_TRUE(verify_master_recurrence(3, 4).holds());
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned k = 1; k <= 8; ++k) EXPECT_TRUE(verify_master_recurrence(n, k).holds()) << n << "," << k;
  }
}

TEST(SumFormulaSign, PrintedVariantFailsAtSmallestCase) {
  const ThmAReport r = verify_thmA(1, 2);
  EXPECT_FALSE(r.printed.holds());
  EXPECT_EQ(r.printed.lhs, RatFunc::q());
  EXPECT_EQ(r.printed.rhs, RatFunc(poly("2*q - 1")));
  EXPECT_TRUE(r.corrected.holds());
  EXPECT_EQ(r.corrected.rhs, RatFunc::q());
}

TEST(SumFormulaSign, CorrectedVariantHoldsOnGrid) {
  EXPECT_TRUE(verify_thmA(2, 3).corrected.holds());
  EXPECT_TRUE(verify_thmA(1, 3).corrected.holds());
  for (unsigned n = 1; n <= 8; ++n) {
    for (unsigned k = 2; k <= 8; ++k) {
      EXPECT_TRUE(verify_thmA(n, k).corrected.holds()) << n << "," << k;
    }
  }
}

TEST(SumFormulaSign, RejectsOutOfDomain) {
  EXPECT_THROW(verify_thmA(0, 3), Error);
  EXPECT_THROW(verify_thmA(1, 1), Error);
  try {
    verify_thmA(0, 3);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

}  // namespace
}  // namespace qsum

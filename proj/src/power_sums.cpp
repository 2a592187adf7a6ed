#include "qsum/power_sums.hpp"

#include <vector>

#include "qsum/error.hpp"

namespace qsum {

namespace {

RatFunc rat(const Integer& v) { return RatFunc(Rational(v)); }

RatFunc k_pow(unsigned k, unsigned e) {
  Integer out = 1;
  for (unsigned i = 0; i < e; ++i) out *= k;
  return rat(out);
}

std::vector<QPoly> direct_sums_up_to(unsigned n_max, unsigned k) {
  std::vector<QPoly> sums;
  sums.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) sums.push_back(s_direct(n, k));
  return sums;
}

const RatFunc& q_minus_one() {
  static const RatFunc value = rf_sub(RatFunc::q(), RatFunc(1));
  return value;
}

}  // namespace

void PowerSumRequest::validate(unsigned min_k) const {
  if (k < min_k) {
    throw Error(ErrorCode::InvalidArgument,
                "k must be >= " + std::to_string(min_k) + " (got " +
                    std::to_string(k) + ")");
  }
}

QPoly q_integer(unsigned k) {
  return QPoly(std::vector<Rational>(k, Rational(1)));
}

QPoly s_direct(unsigned n, unsigned k) {
  PowerSumRequest{n, k}.validate();
  std::vector<Rational> coeffs(k, Rational(0));
  for (unsigned l = 0; l < k; ++l) {
    Integer p = 1;  // 0^0 = 1
    for (unsigned i = 0; i < n; ++i) p *= l;
    coeffs[l] = Rational(p);
  }
  return QPoly(std::move(coeffs));
}

RatFunc s_closed_1(unsigned k) {
  PowerSumRequest{1, k}.validate();
  // (q^k k - q [k]_q) / (q - 1)
  const RatFunc q = RatFunc::q();
  const RatFunc top = rf_sub(rf_mul(RatFunc::q_pow(static_cast<int>(k)), k_pow(k, 1)),
                             rf_mul(q, RatFunc(q_integer(k))));
  return rf_div(top, q_minus_one());
}

RatFunc s_closed_2(unsigned k) {
  PowerSumRequest{2, k}.validate();
  // q^k k^2/(q-1) - 2q (q^k k - q[k]_q)/(q-1)^2 - q[k]_q/(q-1)
  const RatFunc q = RatFunc::q();
  const RatFunc qk = RatFunc::q_pow(static_cast<int>(k));
  const RatFunc q_int(q_integer(k));
  const RatFunc d1 = q_minus_one();
  const RatFunc d2 = rf_mul(d1, d1);
  const RatFunc a = rf_div(rf_mul(qk, k_pow(k, 2)), d1);
  const RatFunc b = rf_div(rf_mul(rf_mul(RatFunc(2), q),
                                  rf_sub(rf_mul(qk, k_pow(k, 1)), rf_mul(q, q_int))),
                           d2);
  const RatFunc c = rf_div(rf_mul(q, q_int), d1);
  return rf_sub(rf_sub(a, b), c);
}

RatFunc s_closed_3(unsigned k) {
  PowerSumRequest{3, k}.validate();
  // q^k k^3/(q-1) - 3q/(q-1) S_2 - 3q/(q-1) S_1 - q[k]_q/(q-1)
  const RatFunc q = RatFunc::q();
  const RatFunc d1 = q_minus_one();
  const RatFunc three_q_over = rf_div(rf_mul(RatFunc(3), q), d1);
  const RatFunc a = rf_div(rf_mul(RatFunc::q_pow(static_cast<int>(k)), k_pow(k, 3)), d1);
  const RatFunc b = rf_mul(three_q_over, s_closed_2(k));
  const RatFunc c = rf_mul(three_q_over, s_closed_1(k));
  const RatFunc d = rf_div(rf_mul(q, RatFunc(q_integer(k))), d1);
  return rf_sub(rf_sub(rf_sub(a, b), c), d);
}

QPoly s_recurrence(unsigned n, unsigned k) {
  PowerSumRequest{n, k}.validate();
  const QPoly q = QPoly::q();
  const QPoly q_minus_1{Rational(-1), Rational(1)};
  std::vector<QPoly> sums{q_integer(k)};
  for (unsigned m = 0; m < n; ++m) {
    // (q-1) S_{m+1} = q^k k^{m+1} - q sum_{i<=m} C(m+1,i) S_i
    Integer k_power = 1;
    for (unsigned i = 0; i <= m; ++i) k_power *= k;
    QPoly rhs = QPoly::monomial(Rational(k_power), k);
    for (unsigned i = 0; i <= m; ++i) rhs -= q * sums[i] * Rational(binomial(m + 1, i));
    const RatFunc next = rf_div(RatFunc(rhs), RatFunc(q_minus_1));
    if (!next.is_polynomial()) {
      throw Error(ErrorCode::InternalInconsistency,
                  "recurrence step " + std::to_string(m + 1) + " left a denominator");
    }
    sums.push_back(next.as_qpoly());
  }
  return sums[n];
}

IdentityCheck verify_master_recurrence(unsigned n, unsigned k) {
  PowerSumRequest{n, k}.validate();
  const auto s = direct_sums_up_to(n + 1, k);
  const RatFunc q = RatFunc::q();
  const RatFunc lhs = rf_mul(RatFunc::q_pow(static_cast<int>(k)), k_pow(k, n + 1));
  RatFunc rhs = rf_mul(rf_mul(q, RatFunc(static_cast<long>(n) + 1)), RatFunc(s[n]));
  for (unsigned i = 0; i < n; ++i) {
    rhs = rf_add(rhs, rf_mul(rf_mul(q, rat(binomial(n + 1, i))), RatFunc(s[i])));
  }
  rhs = rf_add(rhs, rf_mul(q_minus_one(), RatFunc(s[n + 1])));
  return {lhs, rhs};
}

ThmAReport verify_thmA(unsigned n, unsigned k) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  PowerSumRequest{n, k}.validate(2);
  const auto s = direct_sums_up_to(n + 1, k);
  const RatFunc inv_n1(make_rational(1, static_cast<long>(n) + 1));
  // k^{n+1}/(n+1) q^{k-1} - 1/(n+1) sum_{i<n} C(n+1,i) S_i
  RatFunc common = rf_mul(rf_mul(k_pow(k, n + 1), inv_n1),
                          RatFunc::q_pow(static_cast<int>(k) - 1));
  for (unsigned i = 0; i < n; ++i) {
    common = rf_sub(common, rf_mul(rf_mul(inv_n1, rat(binomial(n + 1, i))), RatFunc(s[i])));
  }
  // (q-1)/(q(n+1)) S_{n+1}
  const RatFunc top_term =
      rf_mul(rf_div(q_minus_one(), rf_mul(RatFunc::q(), RatFunc(static_cast<long>(n) + 1))),
             RatFunc(s[n + 1]));
  const RatFunc lhs(s[n]);
  return ThmAReport{
      IdentityCheck{lhs, rf_add(common, top_term)},
      IdentityCheck{lhs, rf_sub(common, top_term)},
  };
}

Rational s_classical_limit(unsigned n, unsigned k) {
  return s_direct(n, k).evaluate(Rational(1));
}

}  // namespace qsum

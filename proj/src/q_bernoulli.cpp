#include "qsum/q_bernoulli.hpp"

#include "qsum/eps_series.hpp"
#include "qsum/error.hpp"
#include "qsum/power_sums.hpp"

namespace qsum {

namespace {

RatFunc rat(const Rational& r) { return RatFunc(r); }

void require_thmB_args(unsigned l, unsigned k) {
  if (l < 1) throw Error(ErrorCode::InvalidArgument, "l must be >= 1");
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "k must be >= 2");
}

void require_table(const BernoulliTable& table, unsigned n) {
  if (table.values.size() <= n) {
    throw Error(ErrorCode::InvalidArgument,
                "Bernoulli table too short for index " + std::to_string(n));
  }
}

// q^{-k} S_{l-1,q}(k) + q^{-k} L S_{l,q}(k) / divisor
RatFunc power_sum_side(unsigned l, unsigned k, unsigned divisor) {
  const RatFunc q_neg_k = RatFunc::q_pow(-static_cast<int>(k));
  const RatFunc first = rf_mul(q_neg_k, RatFunc(s_direct(l - 1, k)));
  RatFunc second = rf_mul(rf_mul(q_neg_k, RatFunc::L()), RatFunc(s_direct(l, k)));
  if (divisor != 1) second = rf_mul(second, rat(make_rational(1, divisor)));
  return rf_add(first, second);
}

// (B_{l,q}(k) - q^{-k} B_{l,q}(0)) / l
RatFunc bernoulli_side(unsigned l, unsigned k, const BernoulliTable& table) {
  const QBernPoly p = bern_poly(l, table);
  const RatFunc at_k = bern_poly_eval(p, Rational(k));
  const RatFunc at_0 = bern_poly_eval(p, Rational(0));
  const RatFunc diff = rf_sub(at_k, rf_mul(RatFunc::q_pow(-static_cast<int>(k)), at_0));
  return rf_mul(diff, rat(make_rational(1, l)));
}

// (1/l) sum_{i<l} C(l,i) B_{i,q} k^{l-i} + (1 - q^{-k}) B_{l,q} / l
RatFunc intro_side(unsigned l, unsigned k, const BernoulliTable& table) {
  const RatFunc inv_l = rat(make_rational(1, l));
  RatFunc sum;
  for (unsigned i = 0; i < l; ++i) {
    Integer scale = binomial(l, i);
    for (unsigned e = 0; e < l - i; ++e) scale *= k;
    sum = rf_add(sum, rf_mul(table[i], rat(Rational(scale))));
  }
  const RatFunc one_minus = rf_sub(RatFunc(1), RatFunc::q_pow(-static_cast<int>(k)));
  return rf_add(rf_mul(inv_l, sum), rf_mul(rf_mul(one_minus, table[l]), inv_l));
}

}  // namespace

// Both generators keep B_{n,q} as N_n / (q - 1)^{n+1} and only canonicalize at the end;
// going through RatFunc arithmetic term by term costs a gcd per addition.
namespace {

std::vector<QPoly> powers_of_q_minus_one(unsigned n_max) {
  const QPoly base{Rational(-1), Rational(1)};
  std::vector<QPoly> out{QPoly(1)};
  for (unsigned e = 1; e <= n_max + 1; ++e) out.push_back(out.back() * base);
  return out;
}

}  // namespace

BernoulliTable bern_recursion(unsigned n_max) {
  // N_0 = L, N_k = [k = 1] (q-1)^k - q sum_{i<k} C(k,i) N_i (q-1)^{k-1-i}
  const auto pw = powers_of_q_minus_one(n_max);
  std::vector<BiPoly> num{BiPoly::L()};
  for (unsigned k = 1; k <= n_max; ++k) {
    BiPoly acc;
    for (unsigned i = 0; i < k; ++i) {
      acc = acc + num[i] * (pw[k - 1 - i] * Rational(binomial(k, i)));
    }
    BiPoly top = BiPoly() - acc * QPoly::q();
    if (k == 1) top = top + BiPoly(pw[1]);
    num.push_back(std::move(top));
  }
  BernoulliTable table;
  table.max_index = n_max;
  table.method = BernoulliMethod::Recursion;
  table.values.reserve(n_max + 1);
  for (unsigned k = 0; k <= n_max; ++k) table.values.emplace_back(num[k], pw[k + 1]);
  return table;
}

BernoulliTable bern_series(unsigned n_max) {
  // q e^t - 1 = (q - 1) + sum_{j>=1} q t^j / j!. Its reciprocal has t^m coefficient
  // I_m / (q-1)^{m+1} with I_0 = 1, I_m = -sum_{j=1}^m (q / j!) I_{m-j} (q-1)^{j-1}.
  const auto pw = powers_of_q_minus_one(n_max);
  std::vector<QPoly> inv{QPoly(1)};
  for (unsigned m = 1; m <= n_max; ++m) {
    QPoly acc;
    for (unsigned j = 1; j <= m; ++j) {
      acc = acc + inv[m - j] * pw[j - 1] * make_rational(1, factorial(j));
    }
    inv.push_back(QPoly() - QPoly::q() * acc);
  }
  // B_n = n! (L inv_n + inv_{n-1})
  BernoulliTable table;
  table.max_index = n_max;
  table.method = BernoulliMethod::Series;
  table.values.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    BiPoly num = BiPoly::L() * BiPoly(inv[n]);
    if (n > 0) num = num + BiPoly(inv[n - 1] * pw[1]);
    table.values.emplace_back(num * BiPoly(Rational(factorial(n))), pw[n + 1]);
  }
  return table;
}

QBernPoly bern_poly(unsigned n) { return bern_poly(n, bern_recursion(n)); }

QBernPoly bern_poly(unsigned n, const BernoulliTable& table) {
  require_table(table, n);
  QBernPoly p;
  p.degree = n;
  p.coeffs.reserve(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    p.coeffs.push_back(rf_mul(rat(Rational(binomial(n, j))), table[j]));
  }
  return p;
}

RatFunc bern_poly_eval(const QBernPoly& p, const Rational& x0) {
  // Horner from the x^n coefficient down.
  RatFunc acc;
  const RatFunc x(x0);
  for (const auto& c : p.coeffs) acc = rf_add(rf_mul(acc, x), c);
  return acc;
}

IdentityCheck verify_recursion_identity(unsigned k, const BernoulliTable& table) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  require_table(table, k);
  RatFunc sum;
  for (unsigned i = 0; i <= k; ++i) {
    sum = rf_add(sum, rf_mul(rat(Rational(binomial(k, i))), table[i]));
  }
  return {rf_sub(rf_mul(RatFunc::q(), sum), table[k]), RatFunc(k == 1 ? 1 : 0)};
}

DistributionCheck verify_distribution(unsigned n, unsigned m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be >= 1");
  const BernoulliTable table = bern_recursion(n);
  DistributionCheck check;
  check.lhs.coeffs.assign(n + 1, RatFunc());
  check.rhs.coeffs.assign(n + 1, RatFunc());

  const QBernPoly p = bern_poly(n, table);
  for (unsigned j = 0; j <= n; ++j) check.lhs.coeffs[n - j] = p.coeffs[j];

  // Coefficients of B_{n,q^m}(y): q -> q^m and L -> mL applied to B_{n,q}(y).
  std::vector<RatFunc> substituted;
  substituted.reserve(n + 1);
  for (const auto& c : p.coeffs) substituted.push_back(rf_substitute_power(c, m));

  for (unsigned i = 0; i < m; ++i) {
    const RatFunc q_i = RatFunc::q_pow(static_cast<int>(i));
    for (unsigned j = 0; j <= n; ++j) {
      // ((x + i)/m)^p = sum_r C(p,r) i^{p-r} x^r / m^p
      const unsigned pw = n - j;
      for (unsigned r = 0; r <= pw; ++r) {
        Integer i_pow = 1;
        for (unsigned e = 0; e < pw - r; ++e) i_pow *= i;
        Integer m_pow = 1;
        for (unsigned e = 0; e < pw; ++e) m_pow *= m;
        const Rational scale = make_rational(binomial(pw, r) * i_pow, m_pow);
        if (scale == 0) continue;
        check.rhs.coeffs[r] =
            rf_add(check.rhs.coeffs[r], rf_mul(rf_mul(q_i, substituted[j]), rat(scale)));
      }
    }
  }

  // m^{n-1}, which is 1/m for n = 0.
  Rational factor = make_rational(1, m);
  for (unsigned e = 0; e < n; ++e) factor *= m;
  for (auto& c : check.rhs.coeffs) c = rf_mul(c, rat(factor));
  return check;
}

IdentityCheck verify_thmB(unsigned l, unsigned k, const BernoulliTable& table) {
  require_thmB_args(l, k);
  require_table(table, l);
  return {power_sum_side(l, k, 1), bernoulli_side(l, k, table)};
}

IdentityCheck verify_thmB_corrected(unsigned l, unsigned k, const BernoulliTable& table) {
  require_thmB_args(l, k);
  require_table(table, l);
  return {power_sum_side(l, k, l), bernoulli_side(l, k, table)};
}

IdentityCheck verify_thmB_intro_form(unsigned l, unsigned k, const BernoulliTable& table) {
  require_thmB_args(l, k);
  require_table(table, l);
  return {power_sum_side(l, k, 1), intro_side(l, k, table)};
}

IdentityCheck verify_thmB_intro_form_corrected(unsigned l, unsigned k,
                                               const BernoulliTable& table) {
  require_thmB_args(l, k);
  require_table(table, l);
  return {power_sum_side(l, k, l), intro_side(l, k, table)};
}

IdentityCheck verify_thmB(unsigned l, unsigned k) {
  return verify_thmB(l, k, bern_recursion(l));
}

IdentityCheck verify_thmB_corrected(unsigned l, unsigned k) {
  return verify_thmB_corrected(l, k, bern_recursion(l));
}

IdentityCheck verify_thmB_intro_form(unsigned l, unsigned k) {
  return verify_thmB_intro_form(l, k, bern_recursion(l));
}

IdentityCheck verify_thmB_intro_form_corrected(unsigned l, unsigned k) {
  return verify_thmB_intro_form_corrected(l, k, bern_recursion(l));
}

std::vector<Rational> classical_bernoulli_limits(unsigned n_max) {
  const BernoulliTable table = bern_recursion(n_max);
  std::vector<Rational> out;
  out.reserve(n_max + 1);
  for (const auto& b : table.values) out.push_back(limit_q1(b));
  return out;
}

ClassicalCheck verify_thmB_classical(unsigned l, unsigned k) {
  require_thmB_args(l, k);
  const std::vector<Rational> b = classical_bernoulli_limits(l);
  // B_l(k) - B_l(0) = sum_{j<l} C(l,j) B_j k^{l-j}
  Rational diff(0);
  for (unsigned j = 0; j < l; ++j) {
    diff += Rational(binomial(l, j)) * b[j] * pow(Rational(k), l - j);
  }
  return {limit_q1(power_sum_side(l, k, 1)), diff / Rational(l)};
}

}  // namespace qsum

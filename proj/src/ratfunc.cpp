#include "qsum/ratfunc.hpp"

#include "qsum/error.hpp"

#include <optional>
#include <vector>

namespace qsum {

RatFunc::RatFunc(const BiPoly& num) : num_(num), den_(1) {}

namespace {

// p / (q - root) by synthetic division, or nullopt when root is not a zero of p.
std::optional<QPoly> divide_linear(const QPoly& p, const Rational& root) {
  const auto c = p.coeffs();
  if (c.size() < 2) return std::nullopt;
  std::vector<Rational> quot(c.size() - 1);
  Rational carry = 0;
  for (std::size_t i = c.size(); i-- > 1;) {
    carry = c[i] + carry * root;
    quot[i - 1] = carry;
  }
  if (c[0] + carry * root != 0) return std::nullopt;
  return QPoly(std::move(quot));
}

// Cancels (q - root)^m with m the largest power dividing den and every row of num.
// Denominators built here are mostly powers of q and q - 1, and removing them up front
// keeps the Euclidean gcd below small.
void cancel_linear_factor(BiPoly& num, QPoly& den, const Rational& root) {
  std::vector<QPoly> rows(num.rows().begin(), num.rows().end());
  bool changed = false;
  for (;;) {
    auto d = divide_linear(den, root);
    if (!d) break;
    std::vector<QPoly> next;
    next.reserve(rows.size());
    bool all = true;
    for (const auto& row : rows) {
      if (row.is_zero()) {
        next.push_back(row);
        continue;
      }
      auto r = divide_linear(row, root);
      if (!r) {
        all = false;
        break;
      }
      next.push_back(std::move(*r));
    }
    if (!all) break;
    den = std::move(*d);
    rows = std::move(next);
    changed = true;
  }
  if (changed) num = BiPoly(std::move(rows));
}

}  // namespace

RatFunc::RatFunc(BiPoly num, QPoly den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  cancel_linear_factor(num, den, Rational(0));
  cancel_linear_factor(num, den, Rational(1));
  const QPoly g = gcd(den, num.rows());
  if (g.degree() > 0) {
    num = num.exact_div(g);
    den = exact_div(den, g);
  }
  const Rational lead = den.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num *= QPoly(inv);
    den *= inv;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFunc RatFunc::q_pow(int e) {
  if (e >= 0) return RatFunc(QPoly::monomial(Rational(1), static_cast<unsigned>(e)));
  return RatFunc(Canonical{}, BiPoly(Rational(1)),
                 QPoly::monomial(Rational(1), static_cast<unsigned>(-e)));
}

QPoly RatFunc::as_qpoly() const {
  if (!is_polynomial() || !is_l_free()) {
    throw Error(ErrorCode::InternalInconsistency, "rational function is not a polynomial in q");
  }
  return num_.row(0);
}

Rational RatFunc::as_rational() const {
  if (!is_polynomial() || !is_l_free() || num_.row(0).degree() > 0) {
    throw Error(ErrorCode::InvalidArgument, "rational function is not a constant");
  }
  return num_.row(0).coeff(0);
}

RatFunc RatFunc::operator-() const { return RatFunc(Canonical{}, -num_, den_); }

RatFunc rf_add(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.denominator() == b.denominator()) {
    return RatFunc(a.numerator() + b.numerator(), a.denominator());
  }
  const QPoly g = gcd(a.denominator(), b.denominator());
  const QPoly a_cof = exact_div(b.denominator(), g);
  const QPoly b_cof = exact_div(a.denominator(), g);
  return RatFunc(a.numerator() * a_cof + b.numerator() * b_cof, a.denominator() * a_cof);
}

RatFunc rf_sub(const RatFunc& a, const RatFunc& b) { return rf_add(a, -b); }

RatFunc rf_mul(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return RatFunc(a.numerator() * b.numerator(), a.denominator() * b.denominator());
}

namespace {

RatFunc divide_by_l_free(const RatFunc& a, const RatFunc& d) {
  const QPoly& d_num = d.numerator().rows()[0];
  return RatFunc(a.numerator() * d.denominator(), a.denominator() * d_num);
}

}  // namespace

RatFunc rf_div(const RatFunc& a, const RatFunc& d) {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero rational function");
  if (a.is_zero()) return {};
  if (d.is_l_free()) return divide_by_l_free(a, d);

  // Long division in L over Q(q); representable iff the remainder vanishes.
  const auto divisor_rows = d.numerator().rows();
  const int dl = d.l_degree();
  const int al = a.l_degree();
  if (al < dl) {
    throw Error(ErrorCode::UnsupportedDenominator, "quotient needs L in its denominator");
  }
  std::vector<RatFunc> rem;
  for (const auto& row : a.numerator().rows()) rem.emplace_back(row);
  const RatFunc lead(divisor_rows[dl]);
  std::vector<RatFunc> quot(al - dl + 1);
  for (int i = al; i >= dl; --i) {
    if (rem[i].is_zero()) continue;
    RatFunc factor = divide_by_l_free(rem[i], lead);
    for (int j = 0; j <= dl; ++j) {
      rem[i - dl + j] = rf_sub(rem[i - dl + j], rf_mul(factor, RatFunc(divisor_rows[j])));
    }
    quot[i - dl] = std::move(factor);
  }
  for (const auto& r : rem) {
    if (!r.is_zero()) {
      throw Error(ErrorCode::UnsupportedDenominator, "quotient needs L in its denominator");
    }
  }
  RatFunc q_part;
  RatFunc l_power(1);
  for (const auto& c : quot) {
    q_part = rf_add(q_part, rf_mul(c, l_power));
    l_power = rf_mul(l_power, RatFunc::L());
  }
  // a/d = (a.num / d.num) * d.den / a.den
  return rf_mul(q_part, RatFunc(BiPoly(d.denominator()), a.denominator()));
}

RatFunc rf_substitute_power(const RatFunc& f, unsigned m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "substitution power must be >= 1");
  if (m == 1) return f;
  return RatFunc(f.numerator().substitute_power(m), f.denominator().substitute_power(m));
}

RatFunc rf_pow(const RatFunc& base, unsigned exponent) {
  RatFunc out(1);
  for (unsigned i = 0; i < exponent; ++i) out = rf_mul(out, base);
  return out;
}

}  // namespace qsum

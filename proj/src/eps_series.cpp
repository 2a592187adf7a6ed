#include "qsum/eps_series.hpp"

#include <algorithm>
#include <optional>

#include "qsum/error.hpp"

namespace qsum {

namespace {

using Series = std::vector<Rational>;  // dense power series, index = exponent

Series truncated_mul(const Series& a, const Series& b, std::size_t order) {
  Series out(order, Rational(0));
  for (std::size_t i = 0; i < a.size() && i < order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// 1/s mod e^order; requires s[0] != 0.
Series truncated_inverse(const Series& s, std::size_t order) {
  Series inv(order, Rational(0));
  const Rational s0_inv = 1 / s[0];
  inv[0] = s0_inv;
  for (std::size_t k = 1; k < order; ++k) {
    Rational acc(0);
    for (std::size_t j = 1; j <= k && j < s.size(); ++j) acc += s[j] * inv[k - j];
    inv[k] = -acc * s0_inv;
  }
  return inv;
}

Series log1p_series(std::size_t order) {
  Series out(order, Rational(0));
  for (std::size_t i = 1; i < order; ++i) {
    out[i] = make_rational((i % 2 == 1) ? 1 : -1, static_cast<long>(i));
  }
  return out;
}

Series to_series(const QPoly& p, std::size_t order) {
  Series out(order, Rational(0));
  for (std::size_t i = 0; i < order && i < p.coeffs().size(); ++i) out[i] = p.coeffs()[i];
  return out;
}

/// Numerator N(1+e, log(1+e)) mod e^order.
Series numerator_series(const BiPoly& num, std::size_t order) {
  Series out(order, Rational(0));
  const Series log_s = log1p_series(order);
  Series log_pow(order, Rational(0));
  log_pow[0] = 1;
  for (std::size_t b = 0; b < num.rows().size(); ++b) {
    if (b > 0) log_pow = truncated_mul(log_pow, log_s, order);
    const auto& row = num.rows()[b];
    if (row.is_zero()) continue;
    Series term = truncated_mul(to_series(row.taylor_shift_one(), order), log_pow, order);
    for (std::size_t i = 0; i < order; ++i) out[i] += term[i];
  }
  return out;
}

std::optional<std::size_t> series_valuation(const Series& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 0) return i;
  }
  return std::nullopt;
}

}  // namespace

bool EpsSeries::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

Rational EpsSeries::coeff(int exponent) const {
  if (exponent >= truncation_order) {
    throw Error(ErrorCode::InsufficientPrecision, "coefficient beyond truncation order");
  }
  if (exponent < min_degree) return Rational(0);
  const auto idx = static_cast<std::size_t>(exponent - min_degree);
  return idx < coeffs.size() ? coeffs[idx] : Rational(0);
}

EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) {
  EpsSeries out;
  out.min_degree = a.min_degree + b.min_degree;
  out.truncation_order = std::min(a.truncation_order + b.min_degree,
                                  b.truncation_order + a.min_degree);
  const auto len = static_cast<std::size_t>(out.truncation_order - out.min_degree);
  out.coeffs = truncated_mul(a.coeffs, b.coeffs, len);
  return out;
}

EpsSeries eps_expand(const RatFunc& f, unsigned n_terms) {
  if (n_terms == 0) throw Error(ErrorCode::InvalidArgument, "eps_expand needs at least one term");
  const auto n = static_cast<std::size_t>(n_terms);
  if (f.is_zero()) {
    return EpsSeries{0, Series(n, Rational(0)), static_cast<int>(n_terms)};
  }

  const QPoly den_shifted = f.denominator().taylor_shift_one();
  const auto den_val = static_cast<std::size_t>(den_shifted.valuation());
  Series den_unit(den_shifted.coeffs().begin() + static_cast<long>(den_val),
                  den_shifted.coeffs().end());

  // N(q, log q) solves an order-D linear ODE regular at q = 1, with
  // D = (deg_q + 1)(deg_L + 1), so its e-valuation is at most D - 1.
  std::size_t max_q_deg = 0;
  for (const auto& row : f.numerator().rows()) {
    max_q_deg = std::max(max_q_deg, static_cast<std::size_t>(std::max(row.degree(), 0)));
  }
  const std::size_t val_bound =
      (max_q_deg + 1) * static_cast<std::size_t>(f.l_degree() + 1) - 1;

  std::size_t order = n + den_val + 4;
  for (int attempt = 0; attempt < 2; ++attempt) {
    const Series num = numerator_series(f.numerator(), order);
    const auto num_val = series_valuation(num);
    if (num_val && order >= *num_val + n) {
      const Series shifted(num.begin() + static_cast<long>(*num_val),
                           num.begin() + static_cast<long>(*num_val + n));
      EpsSeries out;
      out.min_degree = static_cast<int>(*num_val) - static_cast<int>(den_val);
      out.coeffs = truncated_mul(shifted, truncated_inverse(den_unit, n), n);
      out.truncation_order = out.min_degree + static_cast<int>(n_terms);
      return out;
    }
    order = std::max(2 * order, val_bound + n + 1);
  }
  throw Error(ErrorCode::InsufficientPrecision,
              "cancellation exhausted the expansion window");
}

Rational limit_q1(const RatFunc& f) {
  const EpsSeries s = eps_expand(f, 1);
  if (s.is_zero()) return Rational(0);
  if (s.min_degree < 0) throw Error(ErrorCode::PoleAtOne, "function diverges as q -> 1");
  return s.coeff(0);
}

}  // namespace qsum

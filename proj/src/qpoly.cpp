#include "qsum/qpoly.hpp"

#include <cstdint>
#include <optional>

#include <algorithm>

#include "qsum/error.hpp"

namespace qsum {

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

QPoly::QPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPoly QPoly::monomial(const Rational& c, unsigned exponent) {
  if (c == 0) return {};
  std::vector<Rational> coeffs(exponent + 1, Rational(0));
  coeffs[exponent] = c;
  return QPoly(std::move(coeffs));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational QPoly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

int QPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return kZeroDegree;
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& rhs) { return *this = *this * rhs; }

QPoly& QPoly::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

Rational QPoly::evaluate(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

QPoly QPoly::substitute_power(unsigned m) const {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "substitution power must be >= 1");
  if (is_zero() || m == 1) return *this;
  std::vector<Rational> out((coeffs_.size() - 1) * m + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * m] = coeffs_[i];
  return QPoly(std::move(out));
}

QPoly QPoly::taylor_shift_one() const {
  // Horner in (1 + e): acc <- acc * (1 + e) + c.
  const QPoly one_plus_e{Rational(1), Rational(1)};
  QPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * one_plus_e + QPoly(*it);
  return acc;
}

QPoly QPoly::make_monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return *this * inv;
}

std::pair<QPoly, QPoly> divmod(const QPoly& dividend, const QPoly& divisor) {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (dividend.degree() < divisor.degree()) return {QPoly(), dividend};
  std::vector<Rational> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  const int dd = divisor.degree();
  std::vector<Rational> quot(dividend.degree() - dd + 1, Rational(0));
  const Rational lead_inv = 1 / divisor.leading();
  for (int i = dividend.degree(); i >= dd; --i) {
    if (rem[i] == 0) continue;
    Rational factor = rem[i] * lead_inv;
    quot[i - dd] = factor;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= factor * divisor.coeffs()[j];
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly exact_div(const QPoly& dividend, const QPoly& divisor) {
  auto [quot, rem] = divmod(dividend, divisor);
  if (!rem.is_zero()) {
    throw Error(ErrorCode::InternalInconsistency, "polynomial division is not exact");
  }
  return quot;
}

namespace {

using Residues = std::vector<std::uint64_t>;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t out = 1;
  base %= p;
  while (exp != 0) {
    if (exp & 1U) out = out * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return out;
}

// Image of a mod p, or nullopt when p divides a denominator or the leading coefficient.
std::optional<Residues> reduce_mod(const QPoly& a, std::uint64_t p) {
  Residues out;
  out.reserve(a.coeffs().size());
  for (const Rational& c : a.coeffs()) {
    const std::uint64_t den = mpz_fdiv_ui(c.get_den_mpz_t(), p);
    if (den == 0) return std::nullopt;
    const std::uint64_t num = mpz_fdiv_ui(c.get_num_mpz_t(), p);
    out.push_back(num * pow_mod(den, p - 2, p) % p);
  }
  if (out.empty() || out.back() == 0) return std::nullopt;
  return out;
}

void trim(Residues& r) {
  while (!r.empty() && r.back() == 0) r.pop_back();
}

int gcd_degree_mod(Residues x, Residues y, std::uint64_t p) {
  while (!y.empty()) {
    const std::uint64_t inv = pow_mod(y.back(), p - 2, p);
    while (x.size() >= y.size()) {
      const std::uint64_t f = x.back() * inv % p;
      const std::size_t shift = x.size() - y.size();
      for (std::size_t j = 0; j < y.size(); ++j) {
        x[shift + j] = (x[shift + j] + (p - f) * y[j]) % p;
      }
      trim(x);
      if (x.empty()) break;
    }
    std::swap(x, y);
  }
  return static_cast<int>(x.size()) - 1;
}

// True when a and b are certainly coprime. With p prime to every denominator and to
// both leading coefficients, deg gcd(a mod p, b mod p) >= deg gcd(a, b).
bool coprime_by_modular_image(const QPoly& a, std::span<const QPoly> rest) {
  static constexpr std::uint64_t kPrimes[] = {2147483647ULL, 2147483629ULL, 2147483587ULL};
  for (const std::uint64_t p : kPrimes) {
    auto acc = reduce_mod(a, p);
    if (!acc) continue;
    bool usable = true;
    for (const QPoly& b : rest) {
      if (b.is_zero()) continue;
      auto rb = reduce_mod(b, p);
      if (!rb) {
        usable = false;
        break;
      }
      const int d = gcd_degree_mod(*acc, std::move(*rb), p);
      if (d == 0) return true;
    }
    if (usable) return false;
  }
  return false;
}

}  // namespace

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (!a.is_zero() && !b.is_zero() && a.degree() > 0 && b.degree() > 0 &&
      coprime_by_modular_image(a, std::span<const QPoly>(&b, 1))) {
    return QPoly(1);
  }
  QPoly x = a;
  QPoly y = b;
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.make_monic();
  }
  return x.make_monic();
}

QPoly gcd(const QPoly& a, std::span<const QPoly> rest) {
  if (a.degree() > 0 && coprime_by_modular_image(a, rest)) return QPoly(1);
  QPoly g = a;
  for (const QPoly& b : rest) {
    if (g.degree() == 0) break;
    if (!b.is_zero()) g = gcd(g, b);
  }
  return g.make_monic();
}

QPoly pow(const QPoly& base, unsigned exponent) {
  QPoly out(Rational(1));
  QPoly sq = base;
  while (exponent != 0) {
    if (exponent & 1U) out *= sq;
    exponent >>= 1U;
    if (exponent != 0) sq = sq * sq;
  }
  return out;
}

}  // namespace qsum

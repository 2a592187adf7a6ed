#include "qsum/bipoly.hpp"

#include "qsum/error.hpp"

namespace qsum {

BiPoly::BiPoly(std::vector<QPoly> rows) : rows_(std::move(rows)) { trim(); }

BiPoly::BiPoly(const QPoly& p) {
  if (!p.is_zero()) rows_.push_back(p);
}

BiPoly::BiPoly(const Rational& c) : BiPoly(QPoly(c)) {}

BiPoly BiPoly::term(const Rational& c, unsigned q_exp, unsigned l_exp) {
  if (c == 0) return {};
  std::vector<QPoly> rows(l_exp + 1);
  rows[l_exp] = QPoly::monomial(c, q_exp);
  return BiPoly(std::move(rows));
}

void BiPoly::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

QPoly BiPoly::row(std::size_t b) const { return b < rows_.size() ? rows_[b] : QPoly(); }

void BiPoly::for_each_term(
    const std::function<void(const Rational&, unsigned, unsigned)>& fn) const {
  for (std::size_t b = 0; b < rows_.size(); ++b) {
    auto coeffs = rows_[b].coeffs();
    for (std::size_t a = 0; a < coeffs.size(); ++a) {
      if (coeffs[a] != 0) fn(coeffs[a], static_cast<unsigned>(a), static_cast<unsigned>(b));
    }
  }
}

QPoly BiPoly::q_content() const {
  QPoly g;
  for (const auto& r : rows_) {
    g = gcd(g, r);
    if (g.degree() == 0) break;
  }
  return g;
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& r : out.rows_) r = -r;
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  if (rhs.rows_.size() > rows_.size()) rows_.resize(rhs.rows_.size());
  for (std::size_t i = 0; i < rhs.rows_.size(); ++i) rows_[i] += rhs.rows_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  if (rhs.rows_.size() > rows_.size()) rows_.resize(rhs.rows_.size());
  for (std::size_t i = 0; i < rhs.rows_.size(); ++i) rows_[i] -= rhs.rows_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const QPoly& rhs) {
  for (auto& r : rows_) r *= rhs;
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<QPoly> rows(a.rows_.size() + b.rows_.size() - 1);
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    if (a.rows_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.rows_.size(); ++j) rows[i + j] += a.rows_[i] * b.rows_[j];
  }
  return BiPoly(std::move(rows));
}

BiPoly BiPoly::exact_div(const QPoly& p) const {
  std::vector<QPoly> rows;
  rows.reserve(rows_.size());
  for (const auto& r : rows_) rows.push_back(qsum::exact_div(r, p));
  return BiPoly(std::move(rows));
}

BiPoly BiPoly::substitute_power(unsigned m) const {
  std::vector<QPoly> rows;
  rows.reserve(rows_.size());
  Rational scale(1);
  for (const auto& r : rows_) {
    rows.push_back(r.substitute_power(m) * scale);
    scale *= m;
  }
  return BiPoly(std::move(rows));
}

}  // namespace qsum

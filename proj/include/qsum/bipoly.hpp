#ifndef QSUM_BIPOLY_HPP
#define QSUM_BIPOLY_HPP

#include <functional>
#include <span>
#include <vector>

#include "qsum/qpoly.hpp"

namespace qsum {

/// Polynomial in q and L (L standing for log q) over the rationals, stored as
/// a polynomial in L whose coefficients are QPoly: rows()[b] multiplies L^b.
/// The top row is never zero; the zero polynomial has no rows.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<QPoly> rows);
  BiPoly(const QPoly& p);         // NOLINT: L-free lift
  BiPoly(const Rational& c);      // NOLINT
  BiPoly(long c) : BiPoly(Rational(c)) {}  // NOLINT
  BiPoly(int c) : BiPoly(Rational(c)) {}   // NOLINT

  /// c * q^a * L^b
  static BiPoly term(const Rational& c, unsigned q_exp, unsigned l_exp);
  static BiPoly L() { return term(Rational(1), 0, 1); }

  bool is_zero() const noexcept { return rows_.empty(); }
  /// Degree in L; -1 for zero.
  int l_degree() const noexcept { return static_cast<int>(rows_.size()) - 1; }
  bool is_l_free() const noexcept { return rows_.size() <= 1; }
  std::span<const QPoly> rows() const noexcept { return rows_; }
  QPoly row(std::size_t b) const;

  /// Visits the nonzero terms c*q^a*L^b, b then a ascending.
  void for_each_term(
      const std::function<void(const Rational&, unsigned, unsigned)>& fn) const;

  /// gcd over Q[q] of all rows (monic), i.e. the q-content.
  QPoly q_content() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const QPoly& rhs);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const QPoly& p) { return a *= p; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// Divides every row exactly by p.
  BiPoly exact_div(const QPoly& p) const;
  /// q -> q^m, L -> m*L
  BiPoly substitute_power(unsigned m) const;

 private:
  void trim();
  std::vector<QPoly> rows_;
};

}  // namespace qsum

#endif  // QSUM_BIPOLY_HPP

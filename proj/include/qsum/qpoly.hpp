#ifndef QSUM_QPOLY_HPP
#define QSUM_QPOLY_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "qsum/rational.hpp"

namespace qsum {

/// Dense univariate polynomial in q over the rationals. coeffs()[i] is the
/// coefficient of q^i; the highest stored coefficient is never zero, so the
/// zero polynomial has no coefficients and degree() == kZeroDegree.
class QPoly {
 public:
  static constexpr int kZeroDegree = -1;

  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(std::initializer_list<Rational> coeffs);
  QPoly(const Rational& constant);  // NOLINT: implicit lift of scalars
  QPoly(long constant) : QPoly(Rational(constant)) {}  // NOLINT
  QPoly(int constant) : QPoly(Rational(constant)) {}   // NOLINT

  static QPoly monomial(const Rational& c, unsigned exponent);
  static QPoly q() { return monomial(Rational(1), 1); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of q^i; zero beyond the degree.
  Rational coeff(std::size_t i) const;
  Rational leading() const;
  /// Lowest exponent with a nonzero coefficient (the q-adic valuation).
  int valuation() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  QPoly& operator*=(const Rational& rhs);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
  friend QPoly operator*(const Rational& c, QPoly a) { return a *= c; }
  friend bool operator==(const QPoly&, const QPoly&) = default;

  Rational evaluate(const Rational& at) const;
  /// p(q) -> p(q^m)
  QPoly substitute_power(unsigned m) const;
  /// p(q) -> p(1 + e), as a polynomial in e.
  QPoly taylor_shift_one() const;
  QPoly make_monic() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Division with remainder over Q[q]. Throws DivisionByZero for divisor 0.
std::pair<QPoly, QPoly> divmod(const QPoly& dividend, const QPoly& divisor);

/// Exact quotient; throws InternalInconsistency if the remainder is nonzero.
QPoly exact_div(const QPoly& dividend, const QPoly& divisor);

/// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);
/// Monic gcd of a and every polynomial in rest (zeros are skipped).
QPoly gcd(const QPoly& a, std::span<const QPoly> rest);

QPoly pow(const QPoly& base, unsigned exponent);

}  // namespace qsum

#endif  // QSUM_QPOLY_HPP

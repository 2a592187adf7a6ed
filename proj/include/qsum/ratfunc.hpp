#ifndef QSUM_RATFUNC_HPP
#define QSUM_RATFUNC_HPP

#include "qsum/bipoly.hpp"

namespace qsum {

/// numerator(q, L) / denominator(q) in canonical form:
///   - the denominator is monic and L-free,
///   - gcd(q-content of numerator, denominator) = 1,
///   - zero is 0/1.
/// Equal functions therefore have identical fields.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const BiPoly& num);                    // NOLINT
  RatFunc(const QPoly& num) : RatFunc(BiPoly(num)) {}  // NOLINT
  RatFunc(const Rational& c) : RatFunc(BiPoly(c)) {}   // NOLINT
  RatFunc(long c) : RatFunc(Rational(c)) {}            // NOLINT
  RatFunc(int c) : RatFunc(Rational(c)) {}             // NOLINT
  /// Canonicalizes; throws DivisionByZero if den is zero.
  RatFunc(BiPoly num, QPoly den);

  static RatFunc q() { return RatFunc(QPoly::q()); }
  static RatFunc L() { return RatFunc(BiPoly::L()); }
  /// q^e for any integer e; negative powers live in the denominator.
  static RatFunc q_pow(int e);

  const BiPoly& numerator() const noexcept { return num_; }
  const QPoly& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }
  bool is_l_free() const noexcept { return num_.is_l_free(); }
  int l_degree() const noexcept { return num_.l_degree(); }

  /// The QPoly value when is_polynomial() and is_l_free(); otherwise throws
  /// InternalInconsistency.
  QPoly as_qpoly() const;
  /// The constant value; throws InvalidArgument unless the function is a
  /// rational constant.
  Rational as_rational() const;

  RatFunc operator-() const;
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  struct Canonical {};
  RatFunc(Canonical, BiPoly num, QPoly den)
      : num_(std::move(num)), den_(std::move(den)) {}

  BiPoly num_;
  QPoly den_;
};

RatFunc rf_add(const RatFunc& a, const RatFunc& b);
RatFunc rf_sub(const RatFunc& a, const RatFunc& b);
RatFunc rf_mul(const RatFunc& a, const RatFunc& b);
/// Throws DivisionByZero when d == 0 and UnsupportedDenominator when the
/// quotient would need L in its denominator.
RatFunc rf_div(const RatFunc& a, const RatFunc& d);
/// q -> q^m, L -> m*L (log(q^m) = m log q).
RatFunc rf_substitute_power(const RatFunc& f, unsigned m);
RatFunc rf_pow(const RatFunc& base, unsigned exponent);

inline RatFunc operator+(const RatFunc& a, const RatFunc& b) { return rf_add(a, b); }
inline RatFunc operator-(const RatFunc& a, const RatFunc& b) { return rf_sub(a, b); }
inline RatFunc operator*(const RatFunc& a, const RatFunc& b) { return rf_mul(a, b); }
inline RatFunc operator/(const RatFunc& a, const RatFunc& b) { return rf_div(a, b); }

}  // namespace qsum

#endif  // QSUM_RATFUNC_HPP

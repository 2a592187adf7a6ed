#ifndef QSUM_NUMERIC_EVAL_HPP
#define QSUM_NUMERIC_EVAL_HPP

#include <mpfr.h>

#include <string>
#include <string_view>

#include "qsum/ratfunc.hpp"

namespace qsum {

/// RAII mpfr_t with a fixed binary precision chosen at construction. Every
/// value carries its own precision, so no global state is involved.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits);
  BigFloat(mpfr_prec_t bits, double value);
  BigFloat(mpfr_prec_t bits, const Rational& value);
  /// Decimal or p/r text. Throws Parse for malformed input.
  BigFloat(mpfr_prec_t bits, std::string_view decimal);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  /// Scientific notation with `digits` significant decimal digits.
  std::string to_string(unsigned digits) const;

 private:
  mpfr_t value_;
};

struct BigComplex {
  BigFloat re;
  BigFloat im;
};

/// Evaluates f at q := q0, L := log(q0) (principal branch), where q0 is given
/// by decimal strings, with at least `digits` significant decimal digits of
/// working precision. Throws PoleAtPoint when the denominator vanishes at q0.
BigComplex rf_eval_numeric(const RatFunc& f, std::string_view q_re,
                           std::string_view q_im, unsigned digits);

BigComplex rf_eval_numeric(const RatFunc& f, double q_re, double q_im,
                           unsigned digits);

}  // namespace qsum

#endif  // QSUM_NUMERIC_EVAL_HPP

#include "qsum/numeric_eval.hpp"

#include <cmath>
#include <string>

#include "qsum/error.hpp"

namespace qsum {

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(mpfr_prec_t bits, double value) : BigFloat(bits) {
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(mpfr_prec_t bits, const Rational& value) : BigFloat(bits) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(mpfr_prec_t bits, std::string_view decimal) : BigFloat(bits) {
  if (decimal.find('/') != std::string_view::npos) {
    const Rational r = parse_rational(decimal);
    mpfr_set_q(value_, r.get_mpq_t(), MPFR_RNDN);
    return;
  }
  const std::string text(decimal);
  char* end = nullptr;
  mpfr_strtofr(value_, text.c_str(), &end, 10, MPFR_RNDN);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw Error(ErrorCode::Parse, "malformed decimal '" + text + "'");
  }
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(unsigned digits) const {
  char* raw = nullptr;
  const int precision_arg = digits == 0 ? 0 : static_cast<int>(digits) - 1;
  if (mpfr_asprintf(&raw, "%.*Re", precision_arg, value_) < 0) {
    throw Error(ErrorCode::InternalInconsistency, "mpfr formatting failed");
  }
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

namespace {

mpfr_prec_t bits_for_digits(unsigned digits) {
  // Ten guard digits on top of the requested ones.
  return static_cast<mpfr_prec_t>(std::ceil((digits + 10) * 3.3219280948873623)) + 8;
}

BigComplex make_complex(mpfr_prec_t bits) { return {BigFloat(bits), BigFloat(bits)}; }

void mul_into(BigComplex& acc, const BigComplex& z, mpfr_prec_t bits) {
  BigFloat ac(bits), bd(bits), ad(bits), bc(bits);
  mpfr_mul(ac.get(), acc.re.get(), z.re.get(), MPFR_RNDN);
  mpfr_mul(bd.get(), acc.im.get(), z.im.get(), MPFR_RNDN);
  mpfr_mul(ad.get(), acc.re.get(), z.im.get(), MPFR_RNDN);
  mpfr_mul(bc.get(), acc.im.get(), z.re.get(), MPFR_RNDN);
  mpfr_sub(acc.re.get(), ac.get(), bd.get(), MPFR_RNDN);
  mpfr_add(acc.im.get(), ad.get(), bc.get(), MPFR_RNDN);
}

void add_into(BigComplex& acc, const BigComplex& z) {
  mpfr_add(acc.re.get(), acc.re.get(), z.re.get(), MPFR_RNDN);
  mpfr_add(acc.im.get(), acc.im.get(), z.im.get(), MPFR_RNDN);
}

BigFloat modulus(const BigComplex& z, mpfr_prec_t bits) {
  BigFloat out(bits);
  mpfr_hypot(out.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return out;
}

struct PolyValue {
  BigComplex value;
  BigFloat magnitude_scale;  // sum |c_a| |q0|^a, for the cancellation test
};

PolyValue eval_qpoly(const QPoly& p, const BigComplex& q0, const BigFloat& q0_abs,
                     mpfr_prec_t bits) {
  PolyValue out{make_complex(bits), BigFloat(bits)};
  auto coeffs = p.coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    mul_into(out.value, q0, bits);
    BigFloat c(bits, *it);
    mpfr_add(out.value.re.get(), out.value.re.get(), c.get(), MPFR_RNDN);
    mpfr_mul(out.magnitude_scale.get(), out.magnitude_scale.get(), q0_abs.get(), MPFR_RNDN);
    mpfr_abs(c.get(), c.get(), MPFR_RNDN);
    mpfr_add(out.magnitude_scale.get(), out.magnitude_scale.get(), c.get(), MPFR_RNDN);
  }
  return out;
}

BigComplex evaluate(const RatFunc& f, const BigComplex& q0, unsigned digits) {
  const mpfr_prec_t bits = bits_for_digits(digits);
  const BigFloat q0_abs = modulus(q0, bits);

  const PolyValue den = eval_qpoly(f.denominator(), q0, q0_abs, bits);
  const BigFloat den_abs = modulus(den.value, bits);
  BigFloat threshold(bits);
  mpfr_mul_2si(threshold.get(), den.magnitude_scale.get(), -(bits - 16), MPFR_RNDN);
  if (den_abs.is_zero() || mpfr_lessequal_p(den_abs.get(), threshold.get())) {
    throw Error(ErrorCode::PoleAtPoint, "denominator vanishes at the evaluation point");
  }

  BigComplex log_q = make_complex(bits);
  if (!f.is_l_free()) {
    if (q0_abs.is_zero()) {
      throw Error(ErrorCode::PoleAtPoint, "log q is singular at q = 0");
    }
    mpfr_log(log_q.re.get(), q0_abs.get(), MPFR_RNDN);
    mpfr_atan2(log_q.im.get(), q0.im.get(), q0.re.get(), MPFR_RNDN);
  }

  // Horner in L over the rows.
  BigComplex num = make_complex(bits);
  const auto rows = f.numerator().rows();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    mul_into(num, log_q, bits);
    add_into(num, eval_qpoly(*it, q0, q0_abs, bits).value);
  }

  // num / den = num * conj(den) / |den|^2
  BigFloat norm(bits);
  mpfr_sqr(norm.get(), den_abs.get(), MPFR_RNDN);
  BigComplex conj{den.value.re, den.value.im};
  mpfr_neg(conj.im.get(), conj.im.get(), MPFR_RNDN);
  mul_into(num, conj, bits);
  mpfr_div(num.re.get(), num.re.get(), norm.get(), MPFR_RNDN);
  mpfr_div(num.im.get(), num.im.get(), norm.get(), MPFR_RNDN);
  return num;
}

}  // namespace

BigComplex rf_eval_numeric(const RatFunc& f, std::string_view q_re, std::string_view q_im,
                           unsigned digits) {
  const mpfr_prec_t bits = bits_for_digits(digits);
  return evaluate(f, BigComplex{BigFloat(bits, q_re), BigFloat(bits, q_im)}, digits);
}

BigComplex rf_eval_numeric(const RatFunc& f, double q_re, double q_im, unsigned digits) {
  const mpfr_prec_t bits = bits_for_digits(digits);
  return evaluate(f, BigComplex{BigFloat(bits, q_re), BigFloat(bits, q_im)}, digits);
}

}  // namespace qsum

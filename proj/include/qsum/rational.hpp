#ifndef QSUM_RATIONAL_HPP
#define QSUM_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace qsum {

// mpq_class keeps the reduced form (den > 0, gcd 1, zero as 0/1) after every
// arithmetic operation. Values built from raw num/den must go through
// make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "p" or "p/r" with optional leading sign.
Rational parse_rational(std::string_view text);

/// Always "p/r", even for integers. Used by the canonical serialization.
std::string render_rational_explicit(const Rational& r);

/// "p" for integers, "p/r" otherwise.
std::string render_rational(const Rational& r);

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);
Rational pow(const Rational& base, unsigned exponent);

}  // namespace qsum

#endif  // QSUM_RATIONAL_HPP

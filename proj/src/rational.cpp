#include "qsum/rational.hpp"

#include <cctype>
#include <vector>

#include "qsum/error.hpp"

namespace qsum {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw Error(ErrorCode::Parse, "malformed rational '" + std::string(whole) + "'");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::Parse, "malformed rational '" + std::string(whole) + "'");
    }
  }
  return Integer(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  Integer num = parse_integer(body.substr(0, slash), text);
  Integer den = 1;
  if (slash != std::string_view::npos) den = parse_integer(body.substr(slash + 1), text);
  if (negative) num = -num;
  return make_rational(num, den);
}

std::string render_rational_explicit(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string render_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return render_rational_explicit(r);
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  // Pascal rows; n stays desk-sized so the quadratic cost is irrelevant.
  std::vector<Integer> row(n + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i; j > 0; --j) row[j] += row[j - 1];
  }
  return row[k];
}

Integer factorial(unsigned n) {
  Integer out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace qsum

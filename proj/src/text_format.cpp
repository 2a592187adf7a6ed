#include "qsum/text_format.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "qsum/error.hpp"

namespace qsum {

namespace {

struct Term {
  Rational c;
  unsigned q_exp;
  unsigned l_exp;
};

std::vector<Term> collect_terms(const BiPoly& p) {
  std::vector<Term> terms;
  p.for_each_term([&](const Rational& c, unsigned a, unsigned b) { terms.push_back({c, a, b}); });
  return terms;  // (b, a) ascending
}

std::string canonical_terms(const BiPoly& p) {
  if (p.is_zero()) return "0";
  const auto terms = collect_terms(p);
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += render_rational_explicit(it->c) + "*q^" + std::to_string(it->q_exp) + "*L^" +
           std::to_string(it->l_exp);
  }
  return out;
}

// Human-readable monomial without its sign; empty factors elided.
std::string text_monomial(const Rational& abs_c, unsigned a, unsigned b) {
  std::vector<std::string> factors;
  if (abs_c != 1 || (a == 0 && b == 0)) factors.push_back(render_rational(abs_c));
  if (a == 1) factors.emplace_back("q");
  if (a > 1) factors.push_back("q^" + std::to_string(a));
  if (b == 1) factors.emplace_back("L");
  if (b > 1) factors.push_back("L^" + std::to_string(b));
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += "*";
    out += f;
  }
  return out;
}

std::string text_terms(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : collect_terms(p)) {
    const bool negative = t.c < 0;
    const Rational abs_c = abs(t.c);
    if (out.empty()) {
      out = negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += text_monomial(abs_c, t.q_exp, t.l_exp);
  }
  return out;
}

std::string latex_rational(const Rational& abs_c) {
  if (abs_c.get_den() == 1) return abs_c.get_num().get_str();
  return "\\frac{" + abs_c.get_num().get_str() + "}{" + abs_c.get_den().get_str() + "}";
}

std::string latex_terms(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : collect_terms(p)) {
    const bool negative = t.c < 0;
    const Rational abs_c = abs(t.c);
    if (out.empty()) {
      out = negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    std::vector<std::string> factors;
    if (abs_c != 1 || (t.q_exp == 0 && t.l_exp == 0)) factors.push_back(latex_rational(abs_c));
    if (t.q_exp == 1) factors.emplace_back("q");
    if (t.q_exp > 1) factors.push_back("q^{" + std::to_string(t.q_exp) + "}");
    if (t.l_exp == 1) factors.emplace_back("\\log q");
    if (t.l_exp > 1) factors.push_back("(\\log q)^{" + std::to_string(t.l_exp) + "}");
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out += " ";
      out += factors[i];
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatFunc parse() {
    RatFunc value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

 private:
  static constexpr long kMaxExponent = 100000;

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Parse, why + " at offset " + std::to_string(pos_) + " in '" +
                                      std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expression() {
    RatFunc acc = product();
    for (;;) {
      if (accept('+')) {
        acc = rf_add(acc, product());
      } else if (accept('-')) {
        acc = rf_sub(acc, product());
      } else {
        return acc;
      }
    }
  }

  RatFunc product() {
    RatFunc acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = rf_mul(acc, unary());
      } else if (accept('/')) {
        acc = rf_div(acc, unary());
      } else {
        return acc;
      }
    }
  }

  RatFunc unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (!accept('^')) return base;
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::string digits = take_digits();
    if (digits.empty()) fail("expected integer exponent");
    if (digits.size() > 6 || std::stol(digits) > kMaxExponent) fail("exponent too large");
    const auto e = static_cast<unsigned>(std::stol(digits));
    RatFunc raised = rf_pow(base, e);
    return negative ? rf_div(RatFunc(1), raised) : raised;
  }

  RatFunc atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'q') {
      ++pos_;
      return RatFunc::q();
    }
    if (c == 'L') {
      ++pos_;
      return RatFunc::L();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RatFunc(Rational(Integer(take_digits(), 10)));
    }
    fail("unexpected character");
  }

  std::string take_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string render_canonical(const RatFunc& f) {
  const std::string num = canonical_terms(f.numerator());
  if (f.is_polynomial()) return num;
  return "(" + num + ")/(" + canonical_terms(BiPoly(f.denominator())) + ")";
}

std::string render_text(const RatFunc& f) {
  const std::string num = text_terms(f.numerator());
  if (f.is_polynomial()) return num;
  return "(" + num + ")/(" + text_terms(BiPoly(f.denominator())) + ")";
}

std::string render_text(const QPoly& p) { return text_terms(BiPoly(p)); }

std::string render_latex(const RatFunc& f) {
  const std::string num = latex_terms(f.numerator());
  if (f.is_polynomial()) return num;
  return "\\frac{" + num + "}{" + latex_terms(BiPoly(f.denominator())) + "}";
}

std::string render_series(const EpsSeries& s) {
  std::string out;
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    const Rational& c = s.coeffs[i];
    if (c == 0) continue;
    const int e = s.min_degree + static_cast<int>(i);
    const bool negative = c < 0;
    const Rational abs_c = abs(c);
    if (out.empty()) {
      out = negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    if (abs_c != 1 || e == 0) mono = render_rational(abs_c);
    if (e != 0) {
      if (!mono.empty()) mono += "*";
      mono += "e";
      if (e != 1) mono += "^" + std::to_string(e);
    }
    out += mono;
  }
  if (out.empty()) out = "0";
  return out + " + O(e^" + std::to_string(s.truncation_order) + ")";
}

RatFunc parse_ratfunc(std::string_view text) { return Parser(text).parse(); }

}  // namespace qsum

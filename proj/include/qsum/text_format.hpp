#ifndef QSUM_TEXT_FORMAT_HPP
#define QSUM_TEXT_FORMAT_HPP

#include <string>
#include <string_view>

#include "qsum/eps_series.hpp"
#include "qsum/ratfunc.hpp"

namespace qsum {

/// Exact serialization: every term as `c*q^a*L^b` with c written `p/r`,
/// terms ordered by (b, a) descending and joined by " + ". A denominator
/// other than 1 is appended as "(num)/(den)". Zero is "0".
std::string render_canonical(const RatFunc& f);

/// Human form, e.g. "q + 2*q^2" or "(L)/(-1 + q)": terms ascending, unit
/// coefficients and exponents elided.
std::string render_text(const RatFunc& f);
std::string render_text(const QPoly& p);

/// LaTeX with \frac{..}{..} and L written as \log q.
std::string render_latex(const RatFunc& f);

/// Series like "1 - 1/2*e + 1/3*e^2 + O(e^3)".
std::string render_series(const EpsSeries& s);

/// Parses any expression in q and L built from rationals, + - * / ^
/// (integer exponents, negative allowed on L-free bases) and parentheses.
/// Accepts every string produced by the renderers above except LaTeX.
RatFunc parse_ratfunc(std::string_view text);

}  // namespace qsum

#endif  // QSUM_TEXT_FORMAT_HPP

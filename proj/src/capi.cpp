#include "qsum/qsum.h"

#include <cstring>
#include <exception>
#include <new>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qsum/eps_series.hpp"
#include "qsum/error.hpp"
#include "qsum/gen_function.hpp"
#include "qsum/numeric_eval.hpp"
#include "qsum/power_sums.hpp"
#include "qsum/q_bernoulli.hpp"
#include "qsum/text_format.hpp"

struct qsum_ratfunc {
  qsum::RatFunc value;
};

struct qsum_check {
  bool holds = false;
  bool in_x = false;  // sides are polynomials in x
  std::vector<qsum::RatFunc> lhs;
  std::vector<qsum::RatFunc> rhs;
};

namespace {

thread_local std::string g_last_error;

qsum_status map_code(qsum::ErrorCode code) {
  using qsum::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return QSUM_ERR_INVALID_ARGUMENT;
    case ErrorCode::DivisionByZero: return QSUM_ERR_DIVISION_BY_ZERO;
    case ErrorCode::UnsupportedDenominator: return QSUM_ERR_UNSUPPORTED_DENOMINATOR;
    case ErrorCode::PoleAtPoint: return QSUM_ERR_POLE_AT_POINT;
    case ErrorCode::PoleAtOne: return QSUM_ERR_POLE_AT_ONE;
    case ErrorCode::InsufficientPrecision: return QSUM_ERR_INSUFFICIENT_PRECISION;
    case ErrorCode::InternalInconsistency: return QSUM_ERR_INTERNAL_INCONSISTENCY;
    case ErrorCode::Parse: return QSUM_ERR_PARSE;
  }
  return QSUM_ERR_UNKNOWN;
}

qsum_status fail(qsum_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Fn>
qsum_status guarded(Fn&& fn) noexcept {
  try {
    const qsum_status status = fn();
    if (status == QSUM_OK) g_last_error.clear();
    return status;
  } catch (const qsum::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(QSUM_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(QSUM_ERR_UNKNOWN, e.what());
  } catch (...) {
    return fail(QSUM_ERR_UNKNOWN, "unknown failure");
  }
}

qsum_status write_string(const std::string& s, char* buf, size_t cap, size_t* needed) {
  const size_t size = s.size() + 1;
  if (needed != nullptr) *needed = size;
  if (buf == nullptr && cap == 0) return QSUM_OK;
  if (buf == nullptr || cap < size) {
    return fail(QSUM_ERR_BUFFER_TOO_SMALL, "output buffer needs " + std::to_string(size) + " bytes");
  }
  std::memcpy(buf, s.c_str(), size);
  return QSUM_OK;
}

qsum_status emit(qsum::RatFunc value, qsum_ratfunc** out) {
  *out = new qsum_ratfunc{std::move(value)};
  return QSUM_OK;
}

std::string render(const qsum::RatFunc& f, qsum_format format) {
  switch (format) {
    case QSUM_FORMAT_CANONICAL: return qsum::render_canonical(f);
    case QSUM_FORMAT_TEXT: return qsum::render_text(f);
    case QSUM_FORMAT_LATEX: return qsum::render_latex(f);
  }
  throw qsum::Error(qsum::ErrorCode::InvalidArgument, "unknown format");
}

std::string render_x_poly(const std::vector<qsum::RatFunc>& coeffs, qsum_format format) {
  std::string out;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (!out.empty()) out += " + ";
    const std::string c = render(coeffs[i], format);
    if (format == QSUM_FORMAT_LATEX) {
      out += "\\left(" + c + "\\right)";
      if (i == 1) out += " x";
      if (i > 1) out += " x^{" + std::to_string(i) + "}";
    } else {
      out += "(" + c + ")";
      if (i == 1) out += "*x";
      if (i > 1) out += "*x^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

qsum_check* make_check(const qsum::IdentityCheck& c) {
  return new qsum_check{c.holds(), false, {c.lhs}, {c.rhs}};
}

#define QSUM_REQUIRE(cond, what)                                  \
  do {                                                            \
    if (!(cond)) return fail(QSUM_ERR_INVALID_ARGUMENT, (what)); \
  } while (0)

}  // namespace

extern "C" {

const char* qsum_version(void) { return "1.0.0"; }

const char* qsum_status_name(qsum_status status) {
  switch (status) {
    case QSUM_OK: return "ok";
    case QSUM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case QSUM_ERR_DIVISION_BY_ZERO: return "division by zero";
    case QSUM_ERR_UNSUPPORTED_DENOMINATOR: return "unsupported denominator";
    case QSUM_ERR_POLE_AT_POINT: return "pole at point";
    case QSUM_ERR_POLE_AT_ONE: return "pole at q = 1";
    case QSUM_ERR_INSUFFICIENT_PRECISION: return "insufficient precision";
    case QSUM_ERR_INTERNAL_INCONSISTENCY: return "internal inconsistency";
    case QSUM_ERR_PARSE: return "parse error";
    case QSUM_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case QSUM_ERR_OUT_OF_MEMORY: return "out of memory";
    case QSUM_ERR_UNKNOWN: return "unknown error";
  }
  return "unknown error";
}

const char* qsum_last_error(void) { return g_last_error.c_str(); }

qsum_status qsum_ratfunc_parse(const char* text, qsum_ratfunc** out) {
  return guarded([&] {
    QSUM_REQUIRE(text != nullptr && out != nullptr, "null argument");
    return emit(qsum::parse_ratfunc(text), out);
  });
}

qsum_status qsum_ratfunc_clone(const qsum_ratfunc* f, qsum_ratfunc** out) {
  return guarded([&] {
    QSUM_REQUIRE(f != nullptr && out != nullptr, "null argument");
    return emit(f->value, out);
  });
}

void qsum_ratfunc_free(qsum_ratfunc* f) { delete f; }

#define QSUM_BINARY(name, op)                                                    \
  qsum_status name(const qsum_ratfunc* a, const qsum_ratfunc* b, qsum_ratfunc** out) { \
    return guarded([&] {                                                         \
      QSUM_REQUIRE(a != nullptr && b != nullptr && out != nullptr, "null argument"); \
      return emit(op(a->value, b->value), out);                                  \
    });                                                                          \
  }

QSUM_BINARY(qsum_ratfunc_add, qsum::rf_add)
QSUM_BINARY(qsum_ratfunc_sub, qsum::rf_sub)
QSUM_BINARY(qsum_ratfunc_mul, qsum::rf_mul)
QSUM_BINARY(qsum_ratfunc_div, qsum::rf_div)

#undef QSUM_BINARY

qsum_status qsum_ratfunc_substitute_power(const qsum_ratfunc* f, unsigned m, qsum_ratfunc** out) {
  return guarded([&] {
    QSUM_REQUIRE(f != nullptr && out != nullptr, "null argument");
    return emit(qsum::rf_substitute_power(f->value, m), out);
  });
}

qsum_status qsum_ratfunc_equal(const qsum_ratfunc* a, const qsum_ratfunc* b, int* out) {
  return guarded([&] {
    QSUM_REQUIRE(a != nullptr && b != nullptr && out != nullptr, "null argument");
    *out = a->value == b->value ? 1 : 0;
    return QSUM_OK;
  });
}

qsum_status qsum_ratfunc_l_degree(const qsum_ratfunc* f, int* out) {
  return guarded([&] {
    QSUM_REQUIRE(f != nullptr && out != nullptr, "null argument");
    *out = f->value.l_degree();
    return QSUM_OK;
  });
}

qsum_status qsum_ratfunc_render(const qsum_ratfunc* f, qsum_format format, char* buf,
                                size_t cap, size_t* needed) {
  return guarded([&] {
    QSUM_REQUIRE(f != nullptr, "null argument");
    return write_string(render(f->value, format), buf, cap, needed);
  });
}

qsum_status qsum_ratfunc_eval(const qsum_ratfunc* f, const char* q_re, const char* q_im,
                              unsigned digits, char* buf, size_t cap, size_t* needed) {
  return guarded([&] {
    QSUM_REQUIRE(f != nullptr && q_re != nullptr && q_im != nullptr, "null argument");
    QSUM_REQUIRE(digits > 0, "digits must be positive");
    const auto v = qsum::rf_eval_numeric(f->value, q_re, q_im, digits);
    return write_string(v.re.to_string(digits) + " " + v.im.to_string(digits), buf, cap, needed);
  });
}

qsum_status qsum_ratfunc_eval_double(const qsum_ratfunc* f, qsum_complex q0, unsigned digits,
                                     qsum_complex* out) {
  return guarded([&] {
    QSUM_REQUIRE(f != nullptr && out != nullptr, "null argument");
    QSUM_REQUIRE(digits > 0, "digits must be positive");
    const auto v = qsum::rf_eval_numeric(f->value, q0.re, q0.im, digits);
    *out = qsum_complex{v.re.to_double(), v.im.to_double()};
    return QSUM_OK;
  });
}

qsum_status qsum_ratfunc_eps_expand(const qsum_ratfunc* f, unsigned n_terms, char* buf,
                                    size_t cap, size_t* needed) {
  return guarded([&] {
    QSUM_REQUIRE(f != nullptr, "null argument");
    return write_string(qsum::render_series(qsum::eps_expand(f->value, n_terms)), buf, cap,
                        needed);
  });
}

qsum_status qsum_ratfunc_limit_q1(const qsum_ratfunc* f, qsum_ratfunc** out) {
  return guarded([&] {
    QSUM_REQUIRE(f != nullptr && out != nullptr, "null argument");
    return emit(qsum::RatFunc(qsum::limit_q1(f->value)), out);
  });
}

qsum_status qsum_q_integer(unsigned k, qsum_ratfunc** out) {
  return guarded([&] {
    QSUM_REQUIRE(out != nullptr, "null argument");
    return emit(qsum::RatFunc(qsum::q_integer(k)), out);
  });
}

qsum_status qsum_power_sum(unsigned n, unsigned k, qsum_sum_method method, qsum_ratfunc** out) {
  return guarded([&] {
    QSUM_REQUIRE(out != nullptr, "null argument");
    switch (method) {
      case QSUM_SUM_DIRECT: return emit(qsum::RatFunc(qsum::s_direct(n, k)), out);
      case QSUM_SUM_RECURRENCE: return emit(qsum::RatFunc(qsum::s_recurrence(n, k)), out);
      case QSUM_SUM_CLOSED_FORM:
        if (n == 1) return emit(qsum::s_closed_1(k), out);
        if (n == 2) return emit(qsum::s_closed_2(k), out);
        if (n == 3) return emit(qsum::s_closed_3(k), out);
        return fail(QSUM_ERR_INVALID_ARGUMENT, "closed forms exist for n = 1, 2, 3 only");
    }
    return fail(QSUM_ERR_INVALID_ARGUMENT, "unknown method");
  });
}

qsum_status qsum_classical_power_sum(unsigned n, unsigned k, qsum_ratfunc** out) {
  return guarded([&] {
    QSUM_REQUIRE(out != nullptr, "null argument");
    return emit(qsum::RatFunc(qsum::s_classical_limit(n, k)), out);
  });
}

namespace {

// Recursion tables are prefix-stable, so verification sweeps share the largest one built
// so far instead of rebuilding it per cell.
qsum::BernoulliTable recursion_table(unsigned n) {
  static std::mutex mutex;
  static std::shared_ptr<const qsum::BernoulliTable> cache;
  std::shared_ptr<const qsum::BernoulliTable> snapshot;
  {
    std::lock_guard lock(mutex);
    snapshot = cache;
  }
  if (!snapshot || snapshot->max_index < n) {
    snapshot = std::make_shared<const qsum::BernoulliTable>(qsum::bern_recursion(n));
    std::lock_guard lock(mutex);
    if (!cache || cache->max_index < n) cache = snapshot;
  }
  qsum::BernoulliTable out;
  out.max_index = n;
  out.method = qsum::BernoulliMethod::Recursion;
  out.values.assign(snapshot->values.begin(), snapshot->values.begin() + n + 1);
  return out;
}

}  // namespace

qsum_status qsum_bernoulli(unsigned n, qsum_bernoulli_method method, qsum_ratfunc** out) {
  return guarded([&] {
    QSUM_REQUIRE(out != nullptr, "null argument");
    switch (method) {
      case QSUM_BERNOULLI_RECURSION: return emit(recursion_table(n)[n], out);
      case QSUM_BERNOULLI_SERIES: return emit(qsum::bern_series(n)[n], out);
    }
    return fail(QSUM_ERR_INVALID_ARGUMENT, "unknown method");
  });
}

qsum_status qsum_bernoulli_table(unsigned n_max, qsum_bernoulli_method method,
                                 qsum_ratfunc** out, size_t capacity) {
  return guarded([&] {
    QSUM_REQUIRE(out != nullptr, "null argument");
    QSUM_REQUIRE(capacity > n_max, "output array too small");
    qsum::BernoulliTable table;
    switch (method) {
      case QSUM_BERNOULLI_RECURSION: table = recursion_table(n_max); break;
      case QSUM_BERNOULLI_SERIES: table = qsum::bern_series(n_max); break;
      default: return fail(QSUM_ERR_INVALID_ARGUMENT, "unknown method");
    }
    std::vector<std::unique_ptr<qsum_ratfunc>> handles;
    handles.reserve(n_max + 1);
    for (auto& v : table.values) handles.push_back(std::make_unique<qsum_ratfunc>(qsum_ratfunc{std::move(v)}));
    for (unsigned i = 0; i <= n_max; ++i) out[i] = handles[i].release();
    return QSUM_OK;
  });
}

qsum_status qsum_bernoulli_poly_coeff(unsigned n, unsigned j, qsum_ratfunc** out) {
  return guarded([&] {
    QSUM_REQUIRE(out != nullptr, "null argument");
    QSUM_REQUIRE(j <= n, "j must be <= n");
    return emit(qsum::bern_poly(n, recursion_table(n)).coeffs[j], out);
  });
}

qsum_status qsum_bernoulli_poly_eval(unsigned n, const char* x0, qsum_ratfunc** out) {
  return guarded([&] {
    QSUM_REQUIRE(x0 != nullptr && out != nullptr, "null argument");
    return emit(qsum::bern_poly_eval(qsum::bern_poly(n, recursion_table(n)), qsum::parse_rational(x0)), out);
  });
}

qsum_status qsum_verify(qsum_identity identity, unsigned a, unsigned b, qsum_check** out) {
  return guarded([&] {
    QSUM_REQUIRE(out != nullptr, "null argument");
    switch (identity) {
      case QSUM_ID_CLOSED_FORM: {
        qsum::RatFunc closed;
        if (a == 1) {
          closed = qsum::s_closed_1(b);
        } else if (a == 2) {
          closed = qsum::s_closed_2(b);
        } else if (a == 3) {
          closed = qsum::s_closed_3(b);
        } else {
          return fail(QSUM_ERR_INVALID_ARGUMENT, "closed forms exist for n = 1, 2, 3 only");
        }
        *out = make_check({closed, qsum::RatFunc(qsum::s_direct(a, b))});
        return QSUM_OK;
      }
      case QSUM_ID_RECURRENCE:
        *out = make_check({qsum::RatFunc(qsum::s_recurrence(a, b)),
                           qsum::RatFunc(qsum::s_direct(a, b))});
        return QSUM_OK;
      case QSUM_ID_MASTER_RECURRENCE: *out = make_check(qsum::verify_master_recurrence(a, b)); return QSUM_OK;
      case QSUM_ID_THMA_PRINTED: *out = make_check(qsum::verify_thmA(a, b).printed); return QSUM_OK;
      case QSUM_ID_THMA_CORRECTED:
        *out = make_check(qsum::verify_thmA(a, b).corrected);
        return QSUM_OK;
      case QSUM_ID_THMB: *out = make_check(qsum::verify_thmB(a, b, recursion_table(a))); return QSUM_OK;
      case QSUM_ID_THMB_CORRECTED: *out = make_check(qsum::verify_thmB_corrected(a, b, recursion_table(a))); return QSUM_OK;
      case QSUM_ID_THMB_INTRO: *out = make_check(qsum::verify_thmB_intro_form(a, b, recursion_table(a))); return QSUM_OK;
      case QSUM_ID_THMB_INTRO_CORRECTED:
        *out = make_check(qsum::verify_thmB_intro_form_corrected(a, b, recursion_table(a)));
        return QSUM_OK;
      case QSUM_ID_DISTRIBUTION: {
        const auto d = qsum::verify_distribution(a, b);
        *out = new qsum_check{d.holds(), true, d.lhs.coeffs, d.rhs.coeffs};
        return QSUM_OK;
      }
      case QSUM_ID_BERNOULLI_RECURSION:
        *out = make_check(qsum::verify_recursion_identity(a, recursion_table(a)));
        return QSUM_OK;
      case QSUM_ID_BERNOULLI_CROSS:
        *out = make_check({qsum::bern_recursion(a)[a], qsum::bern_series(a)[a]});
        return QSUM_OK;
      case QSUM_ID_THMB_CLASSICAL: {
        const auto c = qsum::verify_thmB_classical(a, b);
        *out = make_check({qsum::RatFunc(c.lhs), qsum::RatFunc(c.rhs)});
        return QSUM_OK;
      }
    }
    return fail(QSUM_ERR_INVALID_ARGUMENT, "unknown identity");
  });
}

qsum_status qsum_check_holds(const qsum_check* check, int* out) {
  return guarded([&] {
    QSUM_REQUIRE(check != nullptr && out != nullptr, "null argument");
    *out = check->holds ? 1 : 0;
    return QSUM_OK;
  });
}

qsum_status qsum_check_render_side(const qsum_check* check, int side, qsum_format format,
                                   char* buf, size_t cap, size_t* needed) {
  return guarded([&] {
    QSUM_REQUIRE(check != nullptr, "null argument");
    QSUM_REQUIRE(side == 0 || side == 1, "side must be 0 or 1");
    const auto& coeffs = side == 0 ? check->lhs : check->rhs;
    const std::string text = check->in_x ? render_x_poly(coeffs, format) : render(coeffs[0], format);
    return write_string(text, buf, cap, needed);
  });
}

void qsum_check_free(qsum_check* check) { delete check; }

namespace {

qsum::GfPoint to_point(const qsum_gf_point& p) {
  return qsum::GfPoint{{p.q0.re, p.q0.im}, {p.t0.re, p.t0.im}, p.x0, p.n_terms, p.tolerance};
}

}  // namespace

qsum_status qsum_gf_closed(const qsum_gf_point* point, qsum_complex* out) {
  return guarded([&] {
    QSUM_REQUIRE(point != nullptr && out != nullptr, "null argument");
    const auto v = qsum::gf_closed(to_point(*point));
    *out = qsum_complex{v.real(), v.imag()};
    return QSUM_OK;
  });
}

qsum_status qsum_gf_partial_sum(const qsum_gf_point* point, qsum_complex* out) {
  return guarded([&] {
    QSUM_REQUIRE(point != nullptr && out != nullptr, "null argument");
    const auto v = qsum::gf_partial_sum(to_point(*point));
    *out = qsum_complex{v.real(), v.imag()};
    return QSUM_OK;
  });
}

qsum_status qsum_gf_truncation_bound(const qsum_gf_point* point, double* out) {
  return guarded([&] {
    QSUM_REQUIRE(point != nullptr && out != nullptr, "null argument");
    *out = qsum::gf_truncation_bound(to_point(*point));
    return QSUM_OK;
  });
}

qsum_status qsum_gf_taylor_check(double q0, unsigned n_max, double tolerance,
                                 qsum_taylor_entry* entries, size_t cap, double* max_rel_error,
                                 int* passed) {
  return guarded([&] {
    QSUM_REQUIRE(max_rel_error != nullptr && passed != nullptr, "null argument");
    QSUM_REQUIRE(entries != nullptr || cap == 0, "null entries");
    if (cap < static_cast<size_t>(n_max) + 1) {
      return fail(QSUM_ERR_BUFFER_TOO_SMALL, "entries must hold n_max + 1 records");
    }
    const auto report = qsum::gf_taylor_check(q0, n_max, tolerance);
    for (size_t i = 0; i < report.entries.size(); ++i) {
      const auto& e = report.entries[i];
      entries[i] = qsum_taylor_entry{e.n, e.step, e.finite_difference, e.exact, e.rel_error};
    }
    *max_rel_error = report.max_rel_error;
    *passed = report.passed() ? 1 : 0;
    return QSUM_OK;
  });
}

}  // extern "C"

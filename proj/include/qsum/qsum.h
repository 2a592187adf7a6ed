/*
 * qsum C API: q-power sums, q-Bernoulli numbers and exact identity checks.
 *
 * Every function returns a qsum_status. Objects are opaque handles owned by
 * the caller and released with the matching *_free function. On failure the
 * out-parameters are left untouched and qsum_last_error() describes the
 * failure for the calling thread.
 *
 * String outputs use the (buf, cap, needed) convention: *needed receives the
 * size including the terminating NUL; pass buf = NULL, cap = 0 to query it.
 * QSUM_ERR_BUFFER_TOO_SMALL is returned when cap < *needed.
 */
#ifndef QSUM_H
#define QSUM_H

#include <stddef.h>

#if defined(_WIN32)
#define QSUM_API __declspec(dllexport)
#else
#define QSUM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qsum_status {
  QSUM_OK = 0,
  QSUM_ERR_INVALID_ARGUMENT = 1,
  QSUM_ERR_DIVISION_BY_ZERO = 2,
  QSUM_ERR_UNSUPPORTED_DENOMINATOR = 3,
  QSUM_ERR_POLE_AT_POINT = 4,
  QSUM_ERR_POLE_AT_ONE = 5,
  QSUM_ERR_INSUFFICIENT_PRECISION = 6,
  QSUM_ERR_INTERNAL_INCONSISTENCY = 7,
  QSUM_ERR_PARSE = 8,
  QSUM_ERR_BUFFER_TOO_SMALL = 9,
  QSUM_ERR_OUT_OF_MEMORY = 10,
  QSUM_ERR_UNKNOWN = 11
} qsum_status;

typedef enum qsum_format {
  QSUM_FORMAT_CANONICAL = 0, /* c*q^a*L^b terms, exact round trip */
  QSUM_FORMAT_TEXT = 1,      /* human form, e.g. "q + 2*q^2" */
  QSUM_FORMAT_LATEX = 2
} qsum_format;

typedef enum qsum_sum_method {
  QSUM_SUM_DIRECT = 0,
  QSUM_SUM_RECURRENCE = 1,
  QSUM_SUM_CLOSED_FORM = 2 /* n in 1..3 only */
} qsum_sum_method;

typedef enum qsum_bernoulli_method {
  QSUM_BERNOULLI_RECURSION = 0,
  QSUM_BERNOULLI_SERIES = 1
} qsum_bernoulli_method;

/* Parameters (a, b) per identity are listed on the right. */
typedef enum qsum_identity {
  QSUM_ID_CLOSED_FORM = 0,            /* n in 1..3, k >= 1 */
  QSUM_ID_RECURRENCE = 1,             /* n, k >= 1 */
  QSUM_ID_MASTER_RECURRENCE = 2,                    /* n, k >= 1 */
  QSUM_ID_THMA_PRINTED = 3,           /* n >= 1, k >= 2 */
  QSUM_ID_THMA_CORRECTED = 4,         /* n >= 1, k >= 2 */
  QSUM_ID_THMB = 5,                   /* l >= 1, k >= 2 */
  QSUM_ID_THMB_CORRECTED = 6,         /* l >= 1, k >= 2 */
  QSUM_ID_THMB_INTRO = 7,             /* l >= 1, k >= 2 */
  QSUM_ID_THMB_INTRO_CORRECTED = 8,   /* l >= 1, k >= 2 */
  QSUM_ID_DISTRIBUTION = 9,           /* n, m >= 1 */
  QSUM_ID_BERNOULLI_RECURSION = 10,   /* k >= 1, b ignored */
  QSUM_ID_BERNOULLI_CROSS = 11,       /* n, b ignored */
  QSUM_ID_THMB_CLASSICAL = 12         /* l >= 1, k >= 2 */
} qsum_identity;

typedef struct qsum_ratfunc qsum_ratfunc;
typedef struct qsum_check qsum_check;

typedef struct qsum_complex {
  double re;
  double im;
} qsum_complex;

typedef struct qsum_gf_point {
  qsum_complex q0;
  qsum_complex t0;
  double x0;
  unsigned n_terms;
  double tolerance;
} qsum_gf_point;

typedef struct qsum_taylor_entry {
  unsigned n;
  double step;
  double finite_difference;
  double exact;
  double rel_error;
} qsum_taylor_entry;

QSUM_API const char* qsum_version(void);
QSUM_API const char* qsum_status_name(qsum_status status);
QSUM_API const char* qsum_last_error(void);

/* Rational functions in q and L = log q. */
QSUM_API qsum_status qsum_ratfunc_parse(const char* text, qsum_ratfunc** out);
QSUM_API qsum_status qsum_ratfunc_clone(const qsum_ratfunc* f, qsum_ratfunc** out);
QSUM_API void qsum_ratfunc_free(qsum_ratfunc* f);
QSUM_API qsum_status qsum_ratfunc_add(const qsum_ratfunc* a, const qsum_ratfunc* b,
                                      qsum_ratfunc** out);
QSUM_API qsum_status qsum_ratfunc_sub(const qsum_ratfunc* a, const qsum_ratfunc* b,
                                      qsum_ratfunc** out);
QSUM_API qsum_status qsum_ratfunc_mul(const qsum_ratfunc* a, const qsum_ratfunc* b,
                                      qsum_ratfunc** out);
QSUM_API qsum_status qsum_ratfunc_div(const qsum_ratfunc* a, const qsum_ratfunc* b,
                                      qsum_ratfunc** out);
QSUM_API qsum_status qsum_ratfunc_substitute_power(const qsum_ratfunc* f, unsigned m,
                                                   qsum_ratfunc** out);
QSUM_API qsum_status qsum_ratfunc_equal(const qsum_ratfunc* a, const qsum_ratfunc* b,
                                        int* out);
QSUM_API qsum_status qsum_ratfunc_l_degree(const qsum_ratfunc* f, int* out);
QSUM_API qsum_status qsum_ratfunc_render(const qsum_ratfunc* f, qsum_format format,
                                         char* buf, size_t cap, size_t* needed);
/* q0 = q_re + i q_im given as decimal strings; writes "<re> <im>". */
QSUM_API qsum_status qsum_ratfunc_eval(const qsum_ratfunc* f, const char* q_re,
                                       const char* q_im, unsigned digits, char* buf,
                                       size_t cap, size_t* needed);
QSUM_API qsum_status qsum_ratfunc_eval_double(const qsum_ratfunc* f, qsum_complex q0,
                                              unsigned digits, qsum_complex* out);
/* Laurent expansion at q = 1 + e, rendered like "1 - 1/2*e + O(e^2)". */
QSUM_API qsum_status qsum_ratfunc_eps_expand(const qsum_ratfunc* f, unsigned n_terms,
                                             char* buf, size_t cap, size_t* needed);
/* lim q->1 as a constant rational function. */
QSUM_API qsum_status qsum_ratfunc_limit_q1(const qsum_ratfunc* f, qsum_ratfunc** out);

/* Power sums S_{n,q}(k) = sum_{l<k} q^l l^n. */
QSUM_API qsum_status qsum_q_integer(unsigned k, qsum_ratfunc** out);
QSUM_API qsum_status qsum_power_sum(unsigned n, unsigned k, qsum_sum_method method,
                                    qsum_ratfunc** out);
QSUM_API qsum_status qsum_classical_power_sum(unsigned n, unsigned k, qsum_ratfunc** out);

/* q-Bernoulli numbers B_{n,q} and polynomials B_{n,q}(x). */
QSUM_API qsum_status qsum_bernoulli(unsigned n, qsum_bernoulli_method method,
                                    qsum_ratfunc** out);
/* B_{0,q} .. B_{n_max,q} in one pass. out must hold n_max + 1 handles; on failure none
   are allocated. */
QSUM_API qsum_status qsum_bernoulli_table(unsigned n_max, qsum_bernoulli_method method,
                                          qsum_ratfunc** out, size_t capacity);
/* Coefficient of x^{n-j} in B_{n,q}(x), i.e. C(n,j) B_{j,q}. */
QSUM_API qsum_status qsum_bernoulli_poly_coeff(unsigned n, unsigned j, qsum_ratfunc** out);
/* x0 is "p" or "p/r". */
QSUM_API qsum_status qsum_bernoulli_poly_eval(unsigned n, const char* x0, qsum_ratfunc** out);

/* Identity checks. */
QSUM_API qsum_status qsum_verify(qsum_identity identity, unsigned a, unsigned b,
                                 qsum_check** out);
QSUM_API qsum_status qsum_check_holds(const qsum_check* check, int* out);
/* side 0 = left, 1 = right. Polynomials in x render as "(c0) + (c1)*x + ...". */
QSUM_API qsum_status qsum_check_render_side(const qsum_check* check, int side,
                                            qsum_format format, char* buf, size_t cap,
                                            size_t* needed);
QSUM_API void qsum_check_free(qsum_check* check);

/* Generating function (log q + t) e^{xt} / (q e^t - 1) in double precision. */
QSUM_API qsum_status qsum_gf_closed(const qsum_gf_point* point, qsum_complex* out);
QSUM_API qsum_status qsum_gf_partial_sum(const qsum_gf_point* point, qsum_complex* out);
QSUM_API qsum_status qsum_gf_truncation_bound(const qsum_gf_point* point, double* out);
/* entries must hold n_max + 1 records. */
QSUM_API qsum_status qsum_gf_taylor_check(double q0, unsigned n_max, double tolerance,
                                          qsum_taylor_entry* entries, size_t cap,
                                          double* max_rel_error, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* QSUM_H */

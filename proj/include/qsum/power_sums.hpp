#ifndef QSUM_POWER_SUMS_HPP
#define QSUM_POWER_SUMS_HPP

#include "qsum/identity.hpp"
#include "qsum/qpoly.hpp"
#include "qsum/ratfunc.hpp"

namespace qsum {

struct PowerSumRequest {
  unsigned n = 0;
  unsigned k = 1;

  /// Throws InvalidArgument unless k >= min_k. k = 0 is the empty sum.
  void validate(unsigned min_k = 0) const;
};

/// [k]_q = 1 + q + ... + q^{k-1}; [0]_q = 0.
QPoly q_integer(unsigned k);

/// S_{n,q}(k) = sum_{l<k} q^l l^n with 0^0 = 1.
QPoly s_direct(unsigned n, unsigned k);

// The three closed forms below are evaluated literally as rational functions
// (with their (q-1) denominators) and only then canonicalized.
RatFunc s_closed_1(unsigned k);
RatFunc s_closed_2(unsigned k);
RatFunc s_closed_3(unsigned k);

/// S_{n,q}(k) bottom-up from the telescoping recurrence
///   q^k k^{m+1} = q sum_{i<=m} C(m+1,i) S_i + (q-1) S_{m+1}
/// seeded with S_0 = [k]_q. Throws InternalInconsistency if a (q-1) division
/// is not exact.
QPoly s_recurrence(unsigned n, unsigned k);

/// lhs = q^k k^{n+1}, rhs = q(n+1)S_n + q sum_{i<n} C(n+1,i) S_i + (q-1)S_{n+1}.
IdentityCheck verify_master_recurrence(unsigned n, unsigned k);

struct ThmAReport {
  /// S_n solved from the recurrence with "+ (q-1)/(q(n+1)) S_{n+1}".
  IdentityCheck printed;
  /// Same with the sign of that term negated, as the recurrence requires.
  IdentityCheck corrected;
};

/// Requires n >= 1, k >= 2.
ThmAReport verify_thmA(unsigned n, unsigned k);

/// S_n(k) = sum_{l<k} l^n, i.e. s_direct(n, k) at q = 1.
Rational s_classical_limit(unsigned n, unsigned k);

}  // namespace qsum

#endif  // QSUM_POWER_SUMS_HPP

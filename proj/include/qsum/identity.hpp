#ifndef QSUM_IDENTITY_HPP
#define QSUM_IDENTITY_HPP

#include "qsum/ratfunc.hpp"

namespace qsum {

/// Both sides of an identity, each in canonical form, so that the identity
/// holds iff the sides are field-for-field equal.
struct IdentityCheck {
  RatFunc lhs;
  RatFunc rhs;

  bool holds() const { return lhs == rhs; }
};

}  // namespace qsum

#endif  // QSUM_IDENTITY_HPP

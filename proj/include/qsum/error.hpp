#ifndef QSUM_ERROR_HPP
#define QSUM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qsum {

enum class ErrorCode {
  InvalidArgument,
  DivisionByZero,
  UnsupportedDenominator,
  PoleAtPoint,
  PoleAtOne,
  InsufficientPrecision,
  InternalInconsistency,
  Parse,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// C layer can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qsum

#endif  // QSUM_ERROR_HPP

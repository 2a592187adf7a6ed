#include "qsum/error.hpp"

namespace qsum {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::UnsupportedDenominator: return "UnsupportedDenominator";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::PoleAtOne: return "PoleAtOne";
    case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace qsum

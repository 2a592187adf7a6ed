#ifndef QSUM_TOOLS_HANDLES_HPP
#define QSUM_TOOLS_HANDLES_HPP

#include <memory>
#include <stdexcept>
#include <string>

#include "qsum/qsum.h"

namespace qsum_cli {

struct RatFuncDeleter {
  void operator()(qsum_ratfunc* f) const noexcept { qsum_ratfunc_free(f); }
};
struct CheckDeleter {
  void operator()(qsum_check* c) const noexcept { qsum_check_free(c); }
};

using RatFuncHandle = std::unique_ptr<qsum_ratfunc, RatFuncDeleter>;
using CheckHandle = std::unique_ptr<qsum_check, CheckDeleter>;

/// A failed C call, carrying the library's status code.
class ApiError : public std::runtime_error {
 public:
  ApiError(qsum_status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  qsum_status status() const noexcept { return status_; }

 private:
  qsum_status status_;
};

inline void check(qsum_status status) {
  if (status != QSUM_OK) {
    throw ApiError(status, std::string(qsum_status_name(status)) + ": " + qsum_last_error());
  }
}

/// Runs a (buf, cap, needed) producer twice: once to size, once to fill.
template <typename Producer>
std::string fetch_string(Producer&& produce) {
  size_t needed = 0;
  check(produce(nullptr, 0, &needed));
  std::string out(needed, '\0');
  check(produce(out.data(), out.size(), &needed));
  out.resize(needed - 1);
  return out;
}

inline std::string render(const qsum_ratfunc* f, qsum_format format) {
  return fetch_string([&](char* buf, size_t cap, size_t* needed) {
    return qsum_ratfunc_render(f, format, buf, cap, needed);
  });
}

inline std::string render_side(const qsum_check* c, int side, qsum_format format) {
  return fetch_string([&](char* buf, size_t cap, size_t* needed) {
    return qsum_check_render_side(c, side, format, buf, cap, needed);
  });
}

}  // namespace qsum_cli

#endif  // QSUM_TOOLS_HANDLES_HPP

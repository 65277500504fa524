#pragma once

#include <stdexcept>
#include <string>

namespace fvs {

// Thrown when an internal consistency check fails. This signals a bug in the
// library, not bad input; the CLI maps it to exit code 3.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Argument/precondition violations by the caller.
inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

namespace detail {
[[noreturn]] inline void check_failed(const char* expr, const std::string& msg) {
  throw internal_error("internal check failed: " + msg + " [" + expr + "]");
}
}  // namespace detail

}  // namespace fvs

#define FVS_CHECK(cond, msg)                                  \
  do {                                                        \
    if (!(cond)) ::fvs::detail::check_failed(#cond, (msg));   \
  } while (0)

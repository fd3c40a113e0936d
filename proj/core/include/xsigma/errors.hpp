#pragma once

#include <stdexcept>
#include <string>

namespace xsigma {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed user input (type strings, weight literals, subset tokens).
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// An operation was called outside its stated precondition.
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// A computation was refused because it exceeds the configured size guards.
struct GuardExceeded : Error {
  explicit GuardExceeded(const std::string& what) : Error(what) {}
};

/// An internal consistency check failed; indicates a bug, not bad input.
struct InternalError : Error {
  explicit InternalError(const std::string& what) : Error(what) {}
};

namespace detail {
[[noreturn]] inline void check_failed(const char* expr, const char* file, int line) {
  throw InternalError(std::string("internal check failed: ") + expr + " at " + file + ":" +
                      std::to_string(line));
}
}  // namespace detail

#define XSIGMA_CHECK(expr) \
  do {                     \
    if (!(expr)) ::xsigma::detail::check_failed(#expr, __FILE__, __LINE__); \
  } while (0)

}  // namespace xsigma

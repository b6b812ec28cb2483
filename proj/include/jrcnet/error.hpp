#pragma once

#include <stdexcept>
#include <string>

namespace jrc {

/// Error categories. The numeric values are shared with the C API and the
/// CLI exit codes.
enum class ErrorCode : int {
  invalid_argument = 1,
  config = 2,      ///< bad parameter value, unknown key, violated precondition
  numerical = 3,   ///< quadrature or search failed to converge
  validation = 4,  ///< analytic/empirical agreement check failed
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail_config(const std::string& what) {
  throw Error(ErrorCode::config, what);
}

[[noreturn]] inline void fail_numerical(const std::string& what) {
  throw Error(ErrorCode::numerical, what);
}

}  // namespace jrc

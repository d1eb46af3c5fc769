#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace prym {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  RelatorNotPreserved,
  OrientationReversing,
  NonSymplectic,
  NotLiftable,
  OddWord,
  NotInScope,
  Explosion,
  InsufficientData,
  Internal,
};

std::string_view error_code_name(ErrorCode code);

// Internal errors flag broken invariants (a bug), everything else is bad input.
inline bool is_internal(ErrorCode code) {
  return code == ErrorCode::Internal || code == ErrorCode::NonSymplectic;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void check_internal(bool condition, const char* what) {
  if (!condition) fail(ErrorCode::Internal, std::string("internal invariant violated: ") + what);
}

}  // namespace prym

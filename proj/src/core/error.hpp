#pragma once

#include <stdexcept>
#include <string>

namespace toric {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kWrongCount,
  kZeroGenerator,
  kDependentGenerators,
  kWrongDimension,
  kOutOfRange,
  kNotUnimodular,
  kNotPrimitive,
  kInfiniteGroup,
  kTooLarge,
  kInvariantViolation,
};

// Every failure in the library surfaces as a ToricError carrying a stable code;
// the C API maps codes one-to-one onto status values.
class ToricError : public std::runtime_error {
 public:
  ToricError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw ToricError(code, what);
}

// Internal consistency check that stays on in release builds.
inline void ensure(bool condition, const char* what) {
  if (!condition) fail(ErrorCode::kInvariantViolation, what);
}

}  // namespace toric

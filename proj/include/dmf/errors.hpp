#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dmf {

enum class ErrorCode {
  NotOddPrime,
  BadDegree,
  Unsupported,
  DivisionByZero,
  DivisionNotExact,
  MixedField,
  ZeroSeries,
  PrecisionExceeded,
  ZeroInput,
  NotMonic,
  EmptySpace,
  BadWeight,
  BadPair,
  NonIntegralCoefficient,
  HypothesisViolated,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this one exception type; callers
// dispatch on code() (the CLI maps codes to exit statuses).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dmf

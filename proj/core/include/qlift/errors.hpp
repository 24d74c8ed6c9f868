#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlift {

enum class ErrorCode {
  NotPSD,
  NotHermitian,
  NotContraction,
  NotStrictContraction,
  NotCoisometric,
  DimensionMismatch,
  NonFinite,
  OrderViolated,
  Incompatible,
  NotCompletable,
  RangeViolation,
  QOutOfRange,
  QNotUnimodular,
  NotQCommuting,
  HypothesisViolated,
  IllConditionedDefect,
  LevelOutOfRange,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every precondition failure in the library surfaces as this exception.
/// The code is stable and machine-checkable; the message names the
/// violated hypothesis in plain terms.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace qlift

#include "qlift/errors.hpp"

namespace qlift {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotContraction: return "NotContraction";
    case ErrorCode::NotStrictContraction: return "NotStrictContraction";
    case ErrorCode::NotCoisometric: return "NotCoisometric";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::OrderViolated: return "OrderViolated";
    case ErrorCode::Incompatible: return "Incompatible";
    case ErrorCode::NotCompletable: return "NotCompletable";
    case ErrorCode::RangeViolation: return "RangeViolation";
    case ErrorCode::QOutOfRange: return "QOutOfRange";
    case ErrorCode::QNotUnimodular: return "QNotUnimodular";
    case ErrorCode::NotQCommuting: return "NotQCommuting";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::IllConditionedDefect: return "IllConditionedDefect";
    case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace qlift

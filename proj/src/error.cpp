#include "janowski/error.hpp"

namespace janowski {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::PoleOnBoundary: return "PoleOnBoundary";
    case ErrorCode::DegenerateMap: return "DegenerateMap";
    case ErrorCode::BranchUndefined: return "BranchUndefined";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ConditionFailed: return "ConditionFailed";
    case ErrorCode::NegativeRealPart: return "NegativeRealPart";
    case ErrorCode::NonCaratheodoryLambda: return "NonCaratheodoryLambda";
    case ErrorCode::InvalidTheoremId: return "InvalidTheoremId";
    case ErrorCode::NoBracket: return "NoBracket";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NoBracket:
    case ErrorCode::NoRoot:
    case ErrorCode::NoConvergence:
    case ErrorCode::QuadratureFailure:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message, double excess)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      excess_(excess) {}

}  // namespace janowski

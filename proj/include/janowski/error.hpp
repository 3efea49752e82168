#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace janowski {

enum class ErrorCode {
  InvalidParams,
  PoleOnBoundary,
  DegenerateMap,
  BranchUndefined,
  OutOfRange,
  ConditionFailed,
  NegativeRealPart,
  NonCaratheodoryLambda,
  InvalidTheoremId,
  NoBracket,
  NoRoot,
  NoConvergence,
  QuadratureFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

// True for failures of an algorithm on valid input, false for violated preconditions.
bool is_numerical(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, double excess = 0.0);

  ErrorCode code() const noexcept { return code_; }
  // Amount by which a checked condition was missed (ConditionFailed only).
  double excess() const noexcept { return excess_; }

 private:
  ErrorCode code_;
  double excess_;
};

}  // namespace janowski

#pragma once

#include <stdexcept>
#include <string>

namespace ecodrive {

enum class ErrorCode {
  InvalidParams,
  InvalidScenario,
  InvalidConfig,
  NonPositiveDuration,
  DegenerateRamp,
  NegativeSpeed,
  NonPositiveStep,
  LayoutMismatch,
  SpaceTooLarge,
  LengthMismatch,
  SizeMismatch,
  EmptyInput,
  NonPositiveBinWidth,
  Io,
};

const char* to_string(ErrorCode code);

// Raised for contract violations. Infeasible driving cycles are not errors;
// they are returned as values by the cycle builders.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ecodrive

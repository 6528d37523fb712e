#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace azposet {

enum class ErrorCode {
  InvalidInput,
  CoverRankError,
  CycleError,
  RankOutOfRange,
  NotGraded,
  SizeLimit,
  NotPrimePower,
  LevelTooLarge,
  NotUPoset,
  NotNormal,
  NotRegular,
  NotStronglyRegular,
  NotStrictlyNormal,
  ChainLimit,
  NotAntichain,
  NotKSperner,
  EmptyFamily,
  SkewViolation,
  IntervalOverlap,
  EmptySlice,
  NotTwoPartSperner,
  NotMaximalChain,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace azposet

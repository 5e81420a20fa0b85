#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mim {

enum class ErrorCode {
  NonPositiveEntry,
  NotNormalized,
  TooFewEvents,
  OutOfRange,
  IndexOutOfRange,
  DegenerateDistribution,
  NoCrossing,
  DegenerateInterval,
  ModelMismatch,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::TooFewEvents: return "TooFewEvents";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DegenerateDistribution: return "DegenerateDistribution";
    case ErrorCode::NoCrossing: return "NoCrossing";
    case ErrorCode::DegenerateInterval: return "DegenerateInterval";
    case ErrorCode::ModelMismatch: return "ModelMismatch";
  }
  return "Unknown";
}

/// Every precondition failure in the library is reported with one of these.
class Error : public std::invalid_argument {
public:
  Error(ErrorCode code, const std::string& what)
      : std::invalid_argument(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for conditions that are mathematically degenerate rather than malformed input.
  bool is_degenerate() const noexcept {
    return code_ == ErrorCode::DegenerateDistribution || code_ == ErrorCode::NoCrossing;
  }

private:
  ErrorCode code_;
};

}  // namespace mim

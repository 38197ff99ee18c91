#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aitbench {

enum class ErrorCode {
  MalformedCode,
  VersionMismatch,
  BudgetNotLarger,
  OutOfBudget,
  NotWitnessed,
  NotStabilized,
  PrefixNotReached,
  CountNeverReached,
  EmptyProfile,
  NotProducible,
  NotMember,
  NoSufficientModel,
  PrefixTooShort,
  NotExact,
  ParseError,
  IoError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Every budget-limited quantity carries one of these.
enum class Certainty { Exact, LowerBound, UpperBound };

std::string_view to_string(Certainty c);

}  // namespace aitbench

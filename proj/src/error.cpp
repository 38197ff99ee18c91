#include "aitbench/error.hpp"

namespace aitbench {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedCode: return "MalformedCode";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::BudgetNotLarger: return "BudgetNotLarger";
    case ErrorCode::OutOfBudget: return "OutOfBudget";
    case ErrorCode::NotWitnessed: return "NotWitnessed";
    case ErrorCode::NotStabilized: return "NotStabilized";
    case ErrorCode::PrefixNotReached: return "PrefixNotReached";
    case ErrorCode::CountNeverReached: return "CountNeverReached";
    case ErrorCode::EmptyProfile: return "EmptyProfile";
    case ErrorCode::NotProducible: return "NotProducible";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::NoSufficientModel: return "NoSufficientModel";
    case ErrorCode::PrefixTooShort: return "PrefixTooShort";
    case ErrorCode::NotExact: return "NotExact";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string_view to_string(Certainty c) {
  switch (c) {
    case Certainty::Exact: return "exact";
    case Certainty::LowerBound: return "lower";
    case Certainty::UpperBound: return "upper";
  }
  return "?";
}

}  // namespace aitbench

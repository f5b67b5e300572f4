#include "tosca/error.hpp"

namespace tosca {

Error::Error(ErrorCode code, const std::string& message)
  : std::runtime_error(std::string(to_string(code)) + ": " + message)
  , code_(code)
{}

ErrorCategory
Error::category() const noexcept
{
  switch (code_) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::KOutOfRange:
    case ErrorCode::KTooLarge:
    case ErrorCode::IoError:
      return ErrorCategory::usage;
    case ErrorCode::SingularGram:
    case ErrorCode::DegenerateSpectrum:
    case ErrorCode::DegeneratePoints:
    case ErrorCode::TooFewValues:
    case ErrorCode::NotConverged:
      return ErrorCategory::numerical;
    default:
      return ErrorCategory::data;
  }
}

const char*
to_string(ErrorCode code)
{
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::DanglingVertex: return "DanglingVertex";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyMatrix: return "EmptyMatrix";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NonPositiveDensity: return "NonPositiveDensity";
    case ErrorCode::NotUndirected: return "NotUndirected";
    case ErrorCode::ZeroDegree: return "ZeroDegree";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::OverlappingSets: return "OverlappingSets";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::SingularGram: return "SingularGram";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::DegeneratePoints: return "DegeneratePoints";
    case ErrorCode::TooFewValues: return "TooFewValues";
    case ErrorCode::NotConverged: return "NotConverged";
  }
  return "Unknown";
}

int
exit_code(ErrorCategory category)
{
  switch (category) {
    case ErrorCategory::usage: return 2;
    case ErrorCategory::data: return 3;
    case ErrorCategory::numerical: return 4;
  }
  return 1;
}

} // namespace tosca

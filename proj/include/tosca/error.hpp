#pragma once

#include <stdexcept>
#include <string>

namespace tosca {

enum class ErrorCode
{
  // usage
  InvalidArgument,
  KOutOfRange,
  KTooLarge,
  IoError,
  // data
  IndexOutOfRange,
  NonPositiveWeight,
  DanglingVertex,
  ParseError,
  EmptyMatrix,
  LengthMismatch,
  NonPositiveDensity,
  NotUndirected,
  ZeroDegree,
  EmptySubset,
  OverlappingSets,
  EmptySet,
  EmptySample,
  // numerical
  SingularGram,
  DegenerateSpectrum,
  DegeneratePoints,
  TooFewValues,
  NotConverged
};

enum class ErrorCategory
{
  usage,
  data,
  numerical
};

//! Exception carrying a machine-readable code; the CLI maps the category to
//! its exit status (2 usage, 3 data, 4 numerical).
class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept;

private:
  ErrorCode code_;
};

const char* to_string(ErrorCode code);

int exit_code(ErrorCategory category);

} // namespace tosca

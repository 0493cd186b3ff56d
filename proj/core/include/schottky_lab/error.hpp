#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schottky_lab {

enum class ErrorCode {
  InvalidArgument,
  NonFiniteValue,
  SingularMatrix,
  DegenerateQuadruple,
  DegenerateTriple,
  IdentityInput,
  NotParabolic,
  InvalidCircle,
  EmptyWord,
  RankMismatch,
  InvalidIndex,
  PointsNotOnCircle,
  OrientationMismatch,
  NestedCircles,
  CrossingCircles,
  NotATangency,
  NonReturning,
  NotClassicalMarking,
  UnsupportedFormat,
  SpanTooWide,
  UnnormalizedLoops,
  DegenerateWrap,
  OutOfRange,
  InvalidAlpha,
  InvalidConfig,
  CoincidentCusps,
  GapTooSmall,
  EmptyMatrix,
  InvalidGenus,
  UnbalancedDegrees,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures surface as this exception; callers branch on code().
class SchottkyError : public std::runtime_error {
 public:
  SchottkyError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace schottky_lab

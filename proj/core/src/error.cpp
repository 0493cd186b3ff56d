#include "schottky_lab/error.hpp"

namespace schottky_lab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DegenerateQuadruple: return "DegenerateQuadruple";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::IdentityInput: return "IdentityInput";
    case ErrorCode::NotParabolic: return "NotParabolic";
    case ErrorCode::InvalidCircle: return "InvalidCircle";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::PointsNotOnCircle: return "PointsNotOnCircle";
    case ErrorCode::OrientationMismatch: return "OrientationMismatch";
    case ErrorCode::NestedCircles: return "NestedCircles";
    case ErrorCode::CrossingCircles: return "CrossingCircles";
    case ErrorCode::NotATangency: return "NotATangency";
    case ErrorCode::NonReturning: return "NonReturning";
    case ErrorCode::NotClassicalMarking: return "NotClassicalMarking";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::SpanTooWide: return "SpanTooWide";
    case ErrorCode::UnnormalizedLoops: return "UnnormalizedLoops";
    case ErrorCode::DegenerateWrap: return "DegenerateWrap";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidAlpha: return "InvalidAlpha";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::CoincidentCusps: return "CoincidentCusps";
    case ErrorCode::GapTooSmall: return "GapTooSmall";
    case ErrorCode::EmptyMatrix: return "EmptyMatrix";
    case ErrorCode::InvalidGenus: return "InvalidGenus";
    case ErrorCode::UnbalancedDegrees: return "UnbalancedDegrees";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace schottky_lab

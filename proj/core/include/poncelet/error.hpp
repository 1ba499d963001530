#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace poncelet {

enum class ErrorCode {
  kCoincidentPoints,
  kIdenticalLines,
  kCollinearPoints,
  kNotCollinear,
  kPointIsCenter,
  kLineThroughCenter,
  kKnownNotIncident,
  kAtInfinity,
  kDuplicatePoints,
  kUnderdeterminedConic,
  kDegenerateConic,
  kNotOnConic,
  kDegenerateTriangle,
  kRightTriangle,
  kBadP,
  kIrrationalIncenter,
  kDegenerateParameters,
  kEquilateralDegenerate,
  kOnSideline,
  kNoDistinctPair,
  kPOnSideline,
  kDegenerateSubTriangle,
  kPOnCircumcircle,
  kGateViolation,
  kExhaustedRejection,
  kPostcondition,
  kParse,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCoincidentPoints: return "CoincidentPoints";
    case ErrorCode::kIdenticalLines: return "IdenticalLines";
    case ErrorCode::kCollinearPoints: return "CollinearPoints";
    case ErrorCode::kNotCollinear: return "NotCollinear";
    case ErrorCode::kPointIsCenter: return "PointIsCenter";
    case ErrorCode::kLineThroughCenter: return "LineThroughCenter";
    case ErrorCode::kKnownNotIncident: return "KnownNotIncident";
    case ErrorCode::kAtInfinity: return "AtInfinity";
    case ErrorCode::kDuplicatePoints: return "DuplicatePoints";
    case ErrorCode::kUnderdeterminedConic: return "UnderdeterminedConic";
    case ErrorCode::kDegenerateConic: return "DegenerateConic";
    case ErrorCode::kNotOnConic: return "NotOnConic";
    case ErrorCode::kDegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::kRightTriangle: return "RightTriangle";
    case ErrorCode::kBadP: return "BadP";
    case ErrorCode::kIrrationalIncenter: return "IrrationalIncenter";
    case ErrorCode::kDegenerateParameters: return "DegenerateParameters";
    case ErrorCode::kEquilateralDegenerate: return "EquilateralDegenerate";
    case ErrorCode::kOnSideline: return "OnSideline";
    case ErrorCode::kNoDistinctPair: return "NoDistinctPair";
    case ErrorCode::kPOnSideline: return "POnSideline";
    case ErrorCode::kDegenerateSubTriangle: return "DegenerateSubTriangle";
    case ErrorCode::kPOnCircumcircle: return "POnCircumcircle";
    case ErrorCode::kGateViolation: return "GateViolation";
    case ErrorCode::kExhaustedRejection: return "ExhaustedRejection";
    case ErrorCode::kPostcondition: return "Postcondition";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

/// Typed failure raised by every construction whose precondition does not
/// hold. The code is stable and machine-checkable; the message is for humans.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw GeometryError(code, what);
}

}  // namespace poncelet

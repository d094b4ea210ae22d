#include "univalence/error.hpp"

#include <sstream>

namespace univalence {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZeroJet: return "DivisionByZeroJet";
    case ErrorKind::BranchCutViolation: return "BranchCutViolation";
    case ErrorKind::NonFiniteJet: return "NonFiniteJet";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::CriticalPoint: return "CriticalPoint";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::EvaluationFailure: return "EvaluationFailure";
    case ErrorKind::BranchTrackingFailure: return "BranchTrackingFailure";
    case ErrorKind::HVanishes: return "HVanishes";
    case ErrorKind::InvalidPlan: return "InvalidPlan";
    case ErrorKind::CriticalPointInRegion: return "CriticalPointInRegion";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::WEqualsOne: return "WEqualsOne";
    case ErrorKind::ContourThroughSingularity: return "ContourThroughSingularity";
    case ErrorKind::PointTooCloseToContour: return "PointTooCloseToContour";
    case ErrorKind::OpenContour: return "OpenContour";
    case ErrorKind::StencilLeavesDomain: return "StencilLeavesDomain";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorKind kind, const std::string& what,
                           const std::optional<cplx>& location) {
  std::ostringstream out;
  out << to_string(kind) << ": " << what;
  if (location) {
    out.precision(17);
    out << " at (" << location->real() << ", " << location->imag() << ")";
  }
  return out.str();
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& what, std::optional<cplx> location)
    : std::runtime_error(format_message(kind, what, location)),
      kind_(kind),
      location_(location) {}

}  // namespace univalence

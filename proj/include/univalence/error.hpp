#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace univalence {

using cplx = std::complex<double>;

enum class ErrorKind {
  DivisionByZeroJet,
  BranchCutViolation,
  NonFiniteJet,
  OutsideDomain,
  PoleAtPoint,
  CriticalPoint,
  InvalidSpec,
  EvaluationFailure,
  BranchTrackingFailure,
  HVanishes,
  InvalidPlan,
  CriticalPointInRegion,
  DenominatorVanishes,
  WEqualsOne,
  ContourThroughSingularity,
  PointTooCloseToContour,
  OpenContour,
  StencilLeavesDomain,
  UsageError,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; `kind` identifies the failure and
// `location` carries the offending point when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::optional<cplx> location = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<cplx>& location() const noexcept { return location_; }

 private:
  ErrorKind kind_;
  std::optional<cplx> location_;
};

}  // namespace univalence

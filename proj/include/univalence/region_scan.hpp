#pragma once

// Supremum estimation of a criterion over a sampled annulus of |z| > 1 and
// the resulting sample-based verdict. A pass never certifies univalence by
// itself; it states that the criterion held on every sample and in the
// extrapolated tail.

#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "univalence/criteria.hpp"
#include "univalence/sampling.hpp"

namespace univalence {

struct GridSample {
  cplx z;
  double lhs = 0.0;
};

struct ScanOptions {
  std::size_t workers = 1;
  bool record_grid = false;
};

struct SupReport {
  double sup_estimate = 0.0;
  cplx argmax;
  bool argmax_at_tail = false;
  std::size_t samples_evaluated = 0;
  bool refinement_converged = false;
  double tail_estimate = 0.0;
  std::vector<double> sup_history;  // after the initial grid+tail, then per refinement round
  std::vector<GridSample> grid;     // evaluation order; filled when record_grid is set
};

/// Relative improvement below which the last refinement counts as converged.
inline constexpr double kRefinementConvergence = 1e-4;

/// Evaluates the criterion selected by p.criterion on the plan grid, on the
/// tail rings r_max, 2 r_max and 4 r_max, then refines around the sampled argmax.
/// Throws CriticalPointInRegion or EvaluationFailure with the offending point.
SupReport estimate_sup(const CriterionParams& p, const SamplingPlan& plan, const ScanOptions& options = {});

enum class Outcome { pass, fail, inconclusive };

std::string_view to_string(Outcome o);

struct Verdict {
  Outcome outcome = Outcome::inconclusive;
  double margin = 0.0;  // 1 - sup_estimate
  double tol = 0.0;
};

inline constexpr double kDefaultVerdictTol = 1e-9;

Verdict issue_verdict(const SupReport& report, double tol = kDefaultVerdictTol);

/// CSV with header `re,im,lhs`, one row per sample in evaluation order.
void write_grid_csv(std::ostream& out, const std::vector<GridSample>& grid);

}  // namespace univalence

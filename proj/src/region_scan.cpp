#include "univalence/region_scan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "univalence/format.hpp"
#include "univalence/parallel.hpp"

namespace univalence {

namespace {

std::vector<double> evaluate_points(const CriterionParams& p, const std::vector<cplx>& points,
                                    std::size_t workers) {
  return parallel_map(
      points,
      [&p](cplx z) {
        try {
          return corollary_lhs(p, z);
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::CriticalPoint) {
            throw Error(ErrorKind::CriticalPointInRegion, e.what(), z);
          }
          throw Error(ErrorKind::EvaluationFailure, e.what(), z);
        }
      },
      workers);
}

struct Best {
  double value = -1.0;
  cplx at;
};

void absorb(Best& best, const std::vector<cplx>& points, const std::vector<double>& values) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (values[i] > best.value) {
      best.value = values[i];
      best.at = points[i];
    }
  }
}

}  // namespace

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

SupReport estimate_sup(const CriterionParams& p, const SamplingPlan& plan, const ScanOptions& options) {
  validate_plan(plan);
  SupReport report;
  auto record = [&](const std::vector<cplx>& points, const std::vector<double>& values) {
    report.samples_evaluated += points.size();
    if (!options.record_grid) return;
    for (std::size_t i = 0; i < points.size(); ++i) report.grid.push_back({points[i], values[i]});
  };

  const std::vector<cplx> grid = sample_exterior(plan);
  const std::vector<double> grid_values = evaluate_points(p, grid, options.workers);
  record(grid, grid_values);
  Best sampled;
  absorb(sampled, grid, grid_values);

  // Tail: evaluate the rings r_max, 2 r_max and 4 r_max and extrapolate
  // twice (Richardson) assuming an expansion in 1/|z|^2; the larger of the
  // outermost value and the extrapolant is kept.
  const std::vector<double> angles = plan_angles(plan);
  const std::size_t m = angles.size();
  std::vector<double> inner_ring(m);
  if (plan.radial_count >= 2) {
    std::copy(grid_values.end() - static_cast<std::ptrdiff_t>(m), grid_values.end(), inner_ring.begin());
  } else {
    std::vector<cplx> ring(m);
    for (std::size_t k = 0; k < m; ++k) ring[k] = std::polar(plan.r_max, angles[k]);
    inner_ring = evaluate_points(p, ring, options.workers);
    record(ring, inner_ring);
    absorb(sampled, ring, inner_ring);
  }
  auto ring_at = [&](double r) {
    std::vector<cplx> ring(m);
    for (std::size_t k = 0; k < m; ++k) ring[k] = std::polar(r, angles[k]);
    return ring;
  };
  const std::vector<cplx> middle = ring_at(2.0 * plan.r_max);
  const std::vector<double> middle_values = evaluate_points(p, middle, options.workers);
  record(middle, middle_values);
  const std::vector<cplx> outer = ring_at(4.0 * plan.r_max);
  const std::vector<double> outer_values = evaluate_points(p, outer, options.workers);
  record(outer, outer_values);
  Best tail{0.0, outer.front()};
  for (std::size_t k = 0; k < m; ++k) {
    const double first = (4.0 * middle_values[k] - inner_ring[k]) / 3.0;
    const double second = (4.0 * outer_values[k] - middle_values[k]) / 3.0;
    const double extrapolated = (16.0 * second - first) / 15.0;
    const double candidate = std::max(outer_values[k], extrapolated);
    if (candidate > tail.value) {
      tail.value = candidate;
      tail.at = outer[k];
    }
  }
  report.tail_estimate = tail.value;

  auto current_sup = [&] { return std::max(sampled.value, report.tail_estimate); };
  report.sup_history.push_back(current_sup());

  double log_step = plan.radial_count >= 2
                        ? std::log(plan.r_max / plan.r_min) / static_cast<double>(plan.radial_count - 1)
                        : 0.0;
  double angle_step = 2.0 * std::numbers::pi / static_cast<double>(m);
  const auto factor = static_cast<long>(plan.refine_factor);
  double improvement = 0.0;
  double before = current_sup();
  for (std::size_t round = 0; round < plan.refine_depth; ++round) {
    log_step /= static_cast<double>(factor);
    angle_step /= static_cast<double>(factor);
    const double r0 = std::abs(sampled.at);
    const double theta0 = std::arg(sampled.at);
    const long radial_span = log_step > 0.0 ? factor : 0;
    std::vector<cplx> local;
    for (long a = -radial_span; a <= radial_span; ++a) {
      const double r = r0 * std::exp(static_cast<double>(a) * log_step);
      if (r < plan.r_min || r > plan.r_max) continue;
      for (long b = -factor; b <= factor; ++b) {
        if (a == 0 && b == 0) continue;
        local.push_back(std::polar(r, theta0 + static_cast<double>(b) * angle_step));
      }
    }
    const std::vector<double> local_values = evaluate_points(p, local, options.workers);
    record(local, local_values);
    before = current_sup();
    absorb(sampled, local, local_values);
    improvement = current_sup() - before;
    report.sup_history.push_back(current_sup());
  }

  report.sup_estimate = current_sup();
  if (report.tail_estimate > sampled.value) {
    report.argmax = tail.at;
    report.argmax_at_tail = true;
  } else {
    report.argmax = sampled.at;
  }
  report.refinement_converged =
      plan.refine_depth > 0 && (improvement == 0.0 || improvement < kRefinementConvergence * before);
  return report;
}

Verdict issue_verdict(const SupReport& report, double tol) {
  Verdict v;
  v.tol = tol;
  v.margin = 1.0 - report.sup_estimate;
  if (report.sup_estimate > 1.0 + tol) {
    v.outcome = Outcome::fail;
  } else if (report.refinement_converged) {
    v.outcome = Outcome::pass;
  } else {
    v.outcome = Outcome::inconclusive;
  }
  return v;
}

void write_grid_csv(std::ostream& out, const std::vector<GridSample>& grid) {
  out << "re,im,lhs\n";
  for (const auto& s : grid) {
    out << format_double(s.z.real()) << ',' << format_double(s.z.imag()) << ',' << format_double(s.lhs) << '\n';
  }
}

}  // namespace univalence

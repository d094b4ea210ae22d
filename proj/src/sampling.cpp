#include "univalence/sampling.hpp"

#include <cmath>
#include <numbers>

namespace univalence {

void validate_plan(const SamplingPlan& plan) {
  if (!(std::isfinite(plan.r_min) && std::isfinite(plan.r_max))) {
    throw Error(ErrorKind::InvalidPlan, "radii must be finite");
  }
  if (!(plan.r_min > 1.0)) throw Error(ErrorKind::InvalidPlan, "r_min must exceed 1");
  if (!(plan.r_max > plan.r_min)) throw Error(ErrorKind::InvalidPlan, "r_max must exceed r_min");
  if (plan.radial_count == 0 || plan.angular_count == 0) {
    throw Error(ErrorKind::InvalidPlan, "sample counts must be positive");
  }
  if (plan.refine_factor == 0) throw Error(ErrorKind::InvalidPlan, "refine_factor must be positive");
}

std::vector<double> plan_radii(const SamplingPlan& plan) {
  validate_plan(plan);
  std::vector<double> radii(plan.radial_count);
  if (plan.radial_count == 1) {
    radii[0] = plan.r_min;
    return radii;
  }
  const double log_ratio = std::log(plan.r_max / plan.r_min);
  const auto steps = static_cast<double>(plan.radial_count - 1);
  for (std::size_t i = 0; i < plan.radial_count; ++i) {
    radii[i] = plan.r_min * std::exp(log_ratio * static_cast<double>(i) / steps);
  }
  radii.front() = plan.r_min;
  radii.back() = plan.r_max;
  return radii;
}

std::vector<double> plan_angles(const SamplingPlan& plan) {
  validate_plan(plan);
  std::vector<double> angles(plan.angular_count);
  for (std::size_t k = 0; k < plan.angular_count; ++k) {
    angles[k] = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(plan.angular_count);
  }
  return angles;
}

std::vector<cplx> sample_exterior(const SamplingPlan& plan) {
  const auto radii = plan_radii(plan);
  const auto angles = plan_angles(plan);
  std::vector<cplx> points;
  points.reserve(radii.size() * angles.size());
  for (double r : radii) {
    for (double theta : angles) points.push_back(std::polar(r, theta));
  }
  return points;
}

}  // namespace univalence

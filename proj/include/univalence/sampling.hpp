#pragma once

#include <cstddef>
#include <vector>

#include "univalence/error.hpp"

namespace univalence {

/// Polar grid over the annulus r_min <= |z| <= r_max of the exterior disk.
/// Radii are geometric, angles uniform starting at 0.
struct SamplingPlan {
  double r_min = 1.0 + 1e-3;
  double r_max = 50.0;
  std::size_t radial_count = 64;
  std::size_t angular_count = 128;
  std::size_t refine_depth = 2;
  std::size_t refine_factor = 4;

  friend bool operator==(const SamplingPlan&, const SamplingPlan&) = default;
};

/// Throws InvalidPlan unless 1 < r_min < r_max < inf and counts are positive.
void validate_plan(const SamplingPlan& plan);

/// Radii r_min * q^i, i < radial_count, ending exactly at r_max.
std::vector<double> plan_radii(const SamplingPlan& plan);

/// Angles 2*pi*k / angular_count.
std::vector<double> plan_angles(const SamplingPlan& plan);

/// Radius-major, then angle.
std::vector<cplx> sample_exterior(const SamplingPlan& plan);

}  // namespace univalence

#pragma once

// Independent ground truth: brute-force injectivity scanning, discrete
// winding numbers, and finite-difference derivatives. Nothing here uses the
// jet arithmetic except the Newton polish of collision candidates.

#include <cstddef>
#include <optional>
#include <vector>

#include "univalence/function_catalog.hpp"
#include "univalence/sampling.hpp"

namespace univalence {

/// Value of a catalog function by plain complex arithmetic.
cplx evaluate_plain(const MeromorphicFn& f, cplx z);

struct Collision {
  cplx z1;
  cplx z2;
  double image_distance = 0.0;
  double domain_distance = 0.0;
};

struct CollisionReport {
  std::vector<Collision> collisions;
  std::size_t grid_size = 0;
  double collision_tolerance = 0.0;
  double separation_floor = 0.0;
  std::size_t candidates_examined = 0;
};

enum class ScanMode { bucketed, pairwise };

/// Largest grid accepted by ScanMode::pairwise.
inline constexpr std::size_t kPairwiseLimit = 2000;

struct InjectivityOptions {
  // Defaults: 1e-9 x median grid-neighbour image distance, and
  // 2 x median grid spacing in the domain.
  std::optional<double> collision_tolerance;
  std::optional<double> separation_floor;
  ScanMode mode = ScanMode::bucketed;
};

/// Scans f on the plan grid. Image pairs closer than their cells' image
/// diameters become candidates; each candidate partner is Newton-polished
/// onto f(z2) = f(z1) and reported when the polished pair stays in the
/// annulus, is at least separation_floor apart, and matches to
/// collision_tolerance.
CollisionReport injectivity_scan(const MeromorphicFn& f, const SamplingPlan& plan,
                                 const InjectivityOptions& options = {});

/// Same scan over an explicit ordering of grid points of `plan`.
CollisionReport injectivity_scan(const MeromorphicFn& f, const std::vector<cplx>& points,
                                 const SamplingPlan& plan, const InjectivityOptions& options = {});

/// Winding number of a closed polyline (last sample repeats the first)
/// around `point`. Throws OpenContour or PointTooCloseToContour.
int winding_number(const std::vector<cplx>& contour, cplx point);

/// Second-order central differences with offsets +-step, +-2 step along the
/// real axis. Throws StencilLeavesDomain if the stencil reaches |z| <= 1.
ComplexJet fd_derivatives(const MeromorphicFn& f, cplx z, double step);

}  // namespace univalence

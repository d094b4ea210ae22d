#pragma once

// Catalog of functions in the class Sigma (meromorphic on |z| > 1 with a
// simple pole at infinity), admissible auxiliary h-functions, and the
// branch-normalized power v = (g'/f')^alpha.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "univalence/jet.hpp"
#include "univalence/sampling.hpp"

namespace univalence {

class MeromorphicFn;

struct Identity {};

/// z + c / z
struct Joukowski {
  cplx c;
};

/// b z + b0 + tail[0] / z + tail[1] / z^2 + ...
struct Laurent {
  cplx b{1.0, 0.0};
  cplx b0{0.0, 0.0};
  std::vector<cplx> tail;
};

/// (a F + b) / (c F + d) for an inner catalog function F.
struct MoebiusOf {
  std::shared_ptr<const MeromorphicFn> inner;
  cplx a{1.0, 0.0};
  cplx b{0.0, 0.0};
  cplx c{0.0, 0.0};
  cplx d{1.0, 0.0};
};

using FunctionSpec = std::variant<Identity, Joukowski, Laurent, MoebiusOf>;

enum class DeclaredClass { Sigma, Sigma0, Unknown };

std::string_view to_string(DeclaredClass c);

class MeromorphicFn {
 public:
  const FunctionSpec& spec() const { return spec_; }
  DeclaredClass declared_class() const { return declared_; }

  /// Leading coefficients (b, b0) at infinity when the function description determines them.
  std::optional<std::pair<cplx, cplx>> leading_coefficients() const;

  /// Jet at z with no domain restriction. Throws PoleAtPoint at poles and
  /// NonFiniteJet when components overflow.
  template <std::size_t N>
  TaylorJet<N> jet(cplx z) const;

  cplx operator()(cplx z) const { return jet<0>(z).value(); }

 private:
  friend MeromorphicFn make_sigma_function(FunctionSpec spec);
  MeromorphicFn(FunctionSpec spec, DeclaredClass declared)
      : spec_(std::move(spec)), declared_(declared) {}

  FunctionSpec spec_;
  DeclaredClass declared_;
};

extern template TaylorJet<0> MeromorphicFn::jet<0>(cplx) const;
extern template TaylorJet<1> MeromorphicFn::jet<1>(cplx) const;
extern template TaylorJet<3> MeromorphicFn::jet<3>(cplx) const;
extern template TaylorJet<4> MeromorphicFn::jet<4>(cplx) const;

/// Validates and wraps a spec. Throws InvalidSpec for b = 0 (Laurent),
/// ad - bc = 0 or a missing inner function (Moebius).
MeromorphicFn make_sigma_function(FunctionSpec spec);

MeromorphicFn identity_fn();
MeromorphicFn joukowski_fn(cplx c);
MeromorphicFn laurent_fn(cplx b, cplx b0, std::vector<cplx> tail);
MeromorphicFn moebius_fn(const MeromorphicFn& inner, cplx a, cplx b, cplx c, cplx d);

enum class SigmaMembership { Sigma0, Sigma, Neither };

std::string_view to_string(SigmaMembership m);

struct SigmaNormalizationReport {
  double radius = 0.0;
  cplx b;
  cplx b0;
  double b_residual = 0.0;   // |b - 1|
  double b0_residual = 0.0;  // |b0|
  double tail_residual = 0.0;  // max |f(z) - b z - b0| on the circle
  SigmaMembership membership = SigmaMembership::Neither;
};

/// Estimates b and b0 by trapezoidal coefficient extraction on the circle
/// |z| = plan.r_max with plan.angular_count nodes; classification uses
/// `class_tol` on |b - 1| and |b0| (and |b| for Neither).
SigmaNormalizationReport validate_sigma_normalization(const MeromorphicFn& f,
                                                      const SamplingPlan& plan,
                                                      double class_tol = 1e-8);

// ---------------------------------------------------------------------------
// h-functions: 1 + h2 / z^2 + h4 / z^4 + ...

struct ConstantOne {};

/// 1 + c / z^2
struct InverseSquare {
  cplx c;
};

/// 1 + coeffs[0] / z^2 + coeffs[1] / z^4 + ...
struct LaurentEven {
  std::vector<cplx> coeffs;
};

/// 1 + powers[0] / z + powers[1] / z^2 + ...; accepted only when every odd
/// power vanishes, and stored as LaurentEven.
struct InversePowerSeries {
  std::vector<cplx> powers;
};

using HSpec = std::variant<ConstantOne, InverseSquare, LaurentEven, InversePowerSeries>;

class HFunction {
 public:
  using Spec = std::variant<ConstantOne, InverseSquare, LaurentEven>;

  const Spec& spec() const { return spec_; }

  /// Coefficients of z^-2, z^-4, ...
  const std::vector<cplx>& even_coefficients() const { return even_; }

  template <std::size_t N>
  TaylorJet<N> jet(cplx z) const;

  cplx operator()(cplx z) const { return jet<0>(z).value(); }

 private:
  friend HFunction make_h_function(const HSpec& spec);
  HFunction(Spec spec, std::vector<cplx> even) : spec_(std::move(spec)), even_(std::move(even)) {}

  Spec spec_;
  std::vector<cplx> even_;
};

extern template TaylorJet<0> HFunction::jet<0>(cplx) const;
extern template TaylorJet<1> HFunction::jet<1>(cplx) const;
extern template TaylorJet<3> HFunction::jet<3>(cplx) const;

/// Throws InvalidSpec when an InversePowerSeries carries an odd power.
HFunction make_h_function(const HSpec& spec);

HFunction constant_one_h();
HFunction inverse_square_h(cplx c);

/// Default radius for near-boundary admissibility sampling.
inline constexpr double kNearBoundaryRadius = 1.0 + 1e-3;

struct HAdmissibilityReport {
  double min_re_h = 0.0;
  cplx min_re_h_at;
  double max_ratio = 0.0;  // max |(1 - h) / h|
  cplx max_ratio_at;
  std::size_t samples = 0;
  std::size_t disagreements = 0;  // points where Re h >= 1/2 and |(1-h)/h| <= 1 disagree beyond tol
  bool conditions_agree = true;
  bool pass = false;
};

/// Samples h on the plan grid plus the circle |z| = near_boundary_radius and
/// passes iff min Re h >= 1/2 - tol.
HAdmissibilityReport validate_h_admissible(const HFunction& h, const SamplingPlan& plan,
                                           double tol = 1e-9,
                                           double near_boundary_radius = kNearBoundaryRadius);

// ---------------------------------------------------------------------------

/// Start radius for branch continuation of log(g'/f').
inline constexpr double kBranchContinuationRadius = 1e6;

/// Jet of v = (g'/f')^alpha at z on the branch with v -> 1 at infinity,
/// continued along the ray from infinity through z.
ComplexJet power_branch(const MeromorphicFn& f, const MeromorphicFn& g, cplx alpha, cplx z);

}  // namespace univalence

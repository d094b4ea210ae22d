#pragma once

// Pointwise left-hand sides of the general univalence criterion on |z| > 1
// and of its five specializations. Every criterion passes at z when its
// value is <= 1.

#include <optional>
#include <string>
#include <string_view>

#include "univalence/differential.hpp"
#include "univalence/function_catalog.hpp"

namespace univalence {

enum class CriterionId { theorem1, alpha_zero, miazga_wesolowski, epstein, becker, nehari };

std::string_view to_string(CriterionId id);
std::optional<CriterionId> parse_criterion(std::string_view name);

struct CriterionParams {
  MeromorphicFn f = identity_fn();
  MeromorphicFn g = identity_fn();
  HFunction h = constant_one_h();
  cplx alpha{0.5, 0.0};
  CriterionId criterion = CriterionId::theorem1;
  // false selects the unsquared (f''/f' - g''/g') factor in the last term.
  bool squared_variant = true;
};

/// Applies the recording rules: becker and nehari record g = identity and
/// h = constant one; corollaries record the alpha they fix (0 or 1/2).
CriterionParams normalize_params(CriterionParams p);

/// Derivative data shared by all criteria at one point. Each function is
/// evaluated once; g and h are skipped when not needed.
struct PointTerms {
  cplx h{1.0, 0.0};
  cplx h_prime{0.0, 0.0};
  cplx pre_f{0.0, 0.0};  // f''/f'
  cplx pre_g{0.0, 0.0};  // g''/g'
  cplx schwarz_f{0.0, 0.0};
  cplx schwarz_g{0.0, 0.0};
};

/// No domain check; throws CriticalPoint, HVanishes, PoleAtPoint.
PointTerms point_terms(const MeromorphicFn& f, const MeromorphicFn* g, const HFunction* h, cplx z);

/// |(1-h)/h |z|^2 - (|z|^2-1)[z h'/h + (1-2a) z f''/f' + 2a z g''/g']
///   + a (|z|^2-1)^2 (z / conj z) h [(a-1/2)(f''/f' - g''/g')^2 + S_f - S_g]|
double theorem1_lhs(const CriterionParams& p, cplx z);

/// Value of the corollary selected by p.criterion (theorem1 delegates to
/// theorem1_lhs). nehari is normalized to (1/2)(|z|^2-1)^2 |S_f|.
double corollary_lhs(const CriterionParams& p, cplx z);

}  // namespace univalence

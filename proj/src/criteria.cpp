#include "univalence/criteria.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace univalence {

namespace {

constexpr std::array<std::pair<CriterionId, std::string_view>, 6> kNames{{
    {CriterionId::theorem1, "theorem1"},
    {CriterionId::alpha_zero, "alpha_zero"},
    {CriterionId::miazga_wesolowski, "miazga_wesolowski"},
    {CriterionId::epstein, "epstein"},
    {CriterionId::becker, "becker"},
    {CriterionId::nehari, "nehari"},
}};

void require_exterior(cplx z) {
  if (!(std::abs(z) > 1.0)) throw Error(ErrorKind::OutsideDomain, "criteria are defined for |z| > 1", z);
}

}  // namespace

std::string_view to_string(CriterionId id) {
  for (const auto& [key, name] : kNames) {
    if (key == id) return name;
  }
  return "theorem1";
}

std::optional<CriterionId> parse_criterion(std::string_view name) {
  for (const auto& [key, label] : kNames) {
    if (label == name) return key;
  }
  return std::nullopt;
}

CriterionParams normalize_params(CriterionParams p) {
  switch (p.criterion) {
    case CriterionId::theorem1:
      break;
    case CriterionId::alpha_zero:
      p.alpha = 0.0;
      break;
    case CriterionId::miazga_wesolowski:
    case CriterionId::epstein:
      p.alpha = 0.5;
      break;
    case CriterionId::becker:
    case CriterionId::nehari:
      p.alpha = 0.5;
      p.g = identity_fn();
      p.h = constant_one_h();
      break;
  }
  return p;
}

PointTerms point_terms(const MeromorphicFn& f, const MeromorphicFn* g, const HFunction* h, cplx z) {
  PointTerms t;
  const ComplexJet fj = f.jet<3>(z);
  t.pre_f = pre_schwarzian(fj, z);
  t.schwarz_f = schwarzian(fj, z);
  if (g != nullptr) {
    const ComplexJet gj = g->jet<3>(z);
    if (is_critical(gj, z)) throw Error(ErrorKind::CriticalPoint, "g' vanishes", z);
    t.pre_g = pre_schwarzian(gj, z);
    t.schwarz_g = schwarzian(gj, z);
  }
  if (h != nullptr) {
    const TaylorJet<1> hj = h->jet<1>(z);
    if (std::abs(hj.value()) < 1e-14) throw Error(ErrorKind::HVanishes, "h vanishes", z);
    t.h = hj.value();
    t.h_prime = hj.d1();
  }
  return t;
}

double theorem1_lhs(const CriterionParams& p, cplx z) {
  require_exterior(z);
  const PointTerms t = point_terms(p.f, &p.g, &p.h, z);
  const cplx a = p.alpha;
  const double r2 = std::norm(z);
  const double s = r2 - 1.0;
  const cplx phase = z / std::conj(z);
  const cplx first = (1.0 - t.h) / t.h * r2;
  const cplx bracket = z * t.h_prime / t.h + (1.0 - 2.0 * a) * z * t.pre_f + 2.0 * a * z * t.pre_g;
  const cplx diff = t.pre_f - t.pre_g;
  const cplx diff_term = p.squared_variant ? diff * diff : diff;
  const cplx third = a * s * s * phase * t.h * ((a - 0.5) * diff_term + t.schwarz_f - t.schwarz_g);
  return std::abs(first - s * bracket + third);
}

double corollary_lhs(const CriterionParams& p, cplx z) {
  if (p.criterion == CriterionId::theorem1) return theorem1_lhs(p, z);
  require_exterior(z);
  const double r2 = std::norm(z);
  const double s = r2 - 1.0;
  const cplx phase = z / std::conj(z);
  switch (p.criterion) {
    case CriterionId::alpha_zero: {
      const PointTerms t = point_terms(p.f, nullptr, &p.h, z);
      return std::abs((1.0 - t.h) / t.h * r2 - s * (z * t.h_prime / t.h + z * t.pre_f));
    }
    case CriterionId::miazga_wesolowski: {
      const PointTerms t = point_terms(p.f, &p.g, &p.h, z);
      return std::abs((1.0 - t.h) / t.h * r2 - s * (z * t.h_prime / t.h + z * t.pre_g) +
                      0.5 * s * s * phase * t.h * (t.schwarz_f - t.schwarz_g));
    }
    case CriterionId::epstein: {
      const PointTerms t = point_terms(p.f, &p.g, nullptr, z);
      return std::abs(0.5 * s * s * phase * (t.schwarz_f - t.schwarz_g) - s * z * t.pre_g);
    }
    case CriterionId::becker: {
      const PointTerms t = point_terms(p.f, nullptr, nullptr, z);
      return s * std::abs(z * t.pre_f);
    }
    case CriterionId::nehari: {
      const PointTerms t = point_terms(p.f, nullptr, nullptr, z);
      return 0.5 * s * s * std::abs(t.schwarz_f);
    }
    case CriterionId::theorem1:
      break;
  }
  return theorem1_lhs(p, z);
}

}  // namespace univalence

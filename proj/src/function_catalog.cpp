#include "univalence/function_catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace univalence {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Jet of z^-n at z (n >= 1).
template <std::size_t N>
TaylorJet<N> inverse_power_jet(cplx z, std::size_t n) {
  typename TaylorJet<N>::Coefficients c;
  c[0] = std::pow(z, -static_cast<int>(n));
  for (std::size_t k = 1; k <= N; ++k) {
    c[k] = c[k - 1] * (-static_cast<double>(n + k - 1) / static_cast<double>(k)) / z;
  }
  return TaylorJet<N>::from_coefficients(c);
}

template <std::size_t N>
TaylorJet<N> laurent_jet(cplx z, cplx b, cplx b0, const std::vector<cplx>& tail) {
  if (z == cplx{0.0, 0.0}) throw Error(ErrorKind::PoleAtPoint, "Laurent series has a pole at 0", z);
  TaylorJet<N> result = b * TaylorJet<N>::variable(z) + b0;
  for (std::size_t i = 0; i < tail.size(); ++i) {
    if (tail[i] == cplx{0.0, 0.0}) continue;
    result += tail[i] * inverse_power_jet<N>(z, i + 1);
  }
  return require_finite(result);
}

bool is_zero(cplx z) { return z == cplx{0.0, 0.0}; }

}  // namespace

std::string_view to_string(DeclaredClass c) {
  switch (c) {
    case DeclaredClass::Sigma: return "Sigma";
    case DeclaredClass::Sigma0: return "Sigma0";
    case DeclaredClass::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(SigmaMembership m) {
  switch (m) {
    case SigmaMembership::Sigma0: return "Sigma0";
    case SigmaMembership::Sigma: return "Sigma";
    case SigmaMembership::Neither: return "neither";
  }
  return "neither";
}

std::optional<std::pair<cplx, cplx>> MeromorphicFn::leading_coefficients() const {
  return std::visit(
      overloaded{
          [](const Identity&) -> std::optional<std::pair<cplx, cplx>> {
            return std::pair{cplx{1.0, 0.0}, cplx{0.0, 0.0}};
          },
          [](const Joukowski&) -> std::optional<std::pair<cplx, cplx>> {
            return std::pair{cplx{1.0, 0.0}, cplx{0.0, 0.0}};
          },
          [](const Laurent& l) -> std::optional<std::pair<cplx, cplx>> {
            return std::pair{l.b, l.b0};
          },
          [](const MoebiusOf& m) -> std::optional<std::pair<cplx, cplx>> {
            if (!is_zero(m.c)) return std::nullopt;
            auto inner = m.inner->leading_coefficients();
            if (!inner) return std::nullopt;
            const cplx scale = m.a / m.d;
            return std::pair{scale * inner->first, scale * inner->second + m.b / m.d};
          },
      },
      spec_);
}

template <std::size_t N>
TaylorJet<N> MeromorphicFn::jet(cplx z) const {
  return std::visit(
      overloaded{
          [&](const Identity&) { return TaylorJet<N>::variable(z); },
          [&](const Joukowski& j) {
            if (z == cplx{0.0, 0.0}) throw Error(ErrorKind::PoleAtPoint, "Joukowski map has a pole at 0", z);
            return require_finite(TaylorJet<N>::variable(z) + j.c * inverse_power_jet<N>(z, 1));
          },
          [&](const Laurent& l) { return laurent_jet<N>(z, l.b, l.b0, l.tail); },
          [&](const MoebiusOf& m) {
            const TaylorJet<N> inner = m.inner->template jet<N>(z);
            const TaylorJet<N> den = m.c * inner + m.d;
            const double scale = std::abs(m.c * inner.value()) + std::abs(m.d);
            if (std::abs(den.value()) <= 1e-14 * scale) {
              throw Error(ErrorKind::PoleAtPoint, "Moebius denominator vanishes", z);
            }
            return require_finite((m.a * inner + m.b) / den);
          },
      },
      spec_);
}

template TaylorJet<0> MeromorphicFn::jet<0>(cplx) const;
template TaylorJet<1> MeromorphicFn::jet<1>(cplx) const;
template TaylorJet<3> MeromorphicFn::jet<3>(cplx) const;
template TaylorJet<4> MeromorphicFn::jet<4>(cplx) const;

MeromorphicFn make_sigma_function(FunctionSpec spec) {
  const DeclaredClass declared = std::visit(
      overloaded{
          [](const Identity&) { return DeclaredClass::Sigma0; },
          [](const Joukowski& j) {
            if (!std::isfinite(j.c.real()) || !std::isfinite(j.c.imag())) {
              throw Error(ErrorKind::InvalidSpec, "Joukowski parameter must be finite");
            }
            return DeclaredClass::Sigma0;
          },
          [](const Laurent& l) {
            if (is_zero(l.b)) throw Error(ErrorKind::InvalidSpec, "Laurent leading coefficient b must be nonzero");
            return (l.b == cplx{1.0, 0.0} && is_zero(l.b0)) ? DeclaredClass::Sigma0 : DeclaredClass::Sigma;
          },
          [](const MoebiusOf& m) {
            if (!m.inner) throw Error(ErrorKind::InvalidSpec, "Moebius composition needs an inner function");
            if (is_zero(m.a * m.d - m.b * m.c)) {
              throw Error(ErrorKind::InvalidSpec, "degenerate Moebius map (ad - bc = 0)");
            }
            return DeclaredClass::Unknown;
          },
      },
      spec);
  MeromorphicFn fn(std::move(spec), declared);
  if (std::holds_alternative<MoebiusOf>(fn.spec_)) {
    if (auto lead = fn.leading_coefficients()) {
      fn.declared_ = (lead->first == cplx{1.0, 0.0} && is_zero(lead->second)) ? DeclaredClass::Sigma0
                                                                               : DeclaredClass::Sigma;
    }
  }
  return fn;
}

MeromorphicFn identity_fn() { return make_sigma_function(Identity{}); }

MeromorphicFn joukowski_fn(cplx c) { return make_sigma_function(Joukowski{c}); }

MeromorphicFn laurent_fn(cplx b, cplx b0, std::vector<cplx> tail) {
  return make_sigma_function(Laurent{b, b0, std::move(tail)});
}

MeromorphicFn moebius_fn(const MeromorphicFn& inner, cplx a, cplx b, cplx c, cplx d) {
  return make_sigma_function(MoebiusOf{std::make_shared<const MeromorphicFn>(inner), a, b, c, d});
}

SigmaNormalizationReport validate_sigma_normalization(const MeromorphicFn& f, const SamplingPlan& plan,
                                                      double class_tol) {
  validate_plan(plan);
  SigmaNormalizationReport report;
  report.radius = plan.r_max;
  const std::size_t n = plan.angular_count;
  std::vector<cplx> nodes(n);
  std::vector<cplx> values(n);
  cplx b_sum{0.0, 0.0};
  cplx b0_sum{0.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    nodes[k] = std::polar(plan.r_max, theta);
    try {
      values[k] = f(nodes[k]);
    } catch (const Error& e) {
      throw Error(ErrorKind::EvaluationFailure, e.what(), nodes[k]);
    }
    b_sum += values[k] / nodes[k];
    b0_sum += values[k];
  }
  report.b = b_sum / static_cast<double>(n);
  report.b0 = b0_sum / static_cast<double>(n);
  report.b_residual = std::abs(report.b - 1.0);
  report.b0_residual = std::abs(report.b0);
  for (std::size_t k = 0; k < n; ++k) {
    report.tail_residual = std::max(report.tail_residual, std::abs(values[k] - report.b * nodes[k] - report.b0));
  }
  if (std::abs(report.b) <= class_tol) {
    report.membership = SigmaMembership::Neither;
  } else if (report.b_residual <= class_tol && report.b0_residual <= class_tol) {
    report.membership = SigmaMembership::Sigma0;
  } else {
    report.membership = SigmaMembership::Sigma;
  }
  return report;
}

// ---------------------------------------------------------------------------

template <std::size_t N>
TaylorJet<N> HFunction::jet(cplx z) const {
  if (z == cplx{0.0, 0.0}) throw Error(ErrorKind::PoleAtPoint, "h has a pole at 0", z);
  TaylorJet<N> result = TaylorJet<N>::constant(1.0);
  for (std::size_t i = 0; i < even_.size(); ++i) {
    if (even_[i] == cplx{0.0, 0.0}) continue;
    result += even_[i] * inverse_power_jet<N>(z, 2 * (i + 1));
  }
  return require_finite(result);
}

template TaylorJet<0> HFunction::jet<0>(cplx) const;
template TaylorJet<1> HFunction::jet<1>(cplx) const;
template TaylorJet<3> HFunction::jet<3>(cplx) const;

HFunction make_h_function(const HSpec& spec) {
  return std::visit(
      overloaded{
          [](const ConstantOne&) { return HFunction(ConstantOne{}, {}); },
          [](const InverseSquare& s) { return HFunction(s, {s.c}); },
          [](const LaurentEven& s) { return HFunction(s, s.coeffs); },
          [](const InversePowerSeries& s) {
            std::vector<cplx> even;
            for (std::size_t i = 0; i < s.powers.size(); ++i) {
              const std::size_t power = i + 1;
              if (power % 2 == 1) {
                if (!is_zero(s.powers[i])) {
                  throw Error(ErrorKind::InvalidSpec,
                              power == 1 ? "h expansion must not contain a z^-1 term"
                                         : "h expansion is restricted to even inverse powers");
                }
              } else {
                even.push_back(s.powers[i]);
              }
            }
            return HFunction(LaurentEven{even}, even);
          },
      },
      spec);
}

HFunction constant_one_h() { return make_h_function(ConstantOne{}); }

HFunction inverse_square_h(cplx c) { return make_h_function(InverseSquare{c}); }

HAdmissibilityReport validate_h_admissible(const HFunction& h, const SamplingPlan& plan, double tol,
                                           double near_boundary_radius) {
  std::vector<cplx> points = sample_exterior(plan);
  if (near_boundary_radius > 1.0) {
    for (double theta : plan_angles(plan)) points.push_back(std::polar(near_boundary_radius, theta));
  }
  HAdmissibilityReport report;
  report.min_re_h = std::numeric_limits<double>::infinity();
  report.max_ratio = -std::numeric_limits<double>::infinity();
  for (cplx z : points) {
    cplx value;
    try {
      value = h(z);
    } catch (const Error& e) {
      throw Error(ErrorKind::EvaluationFailure, e.what(), z);
    }
    if (value == cplx{0.0, 0.0}) throw Error(ErrorKind::EvaluationFailure, "h vanishes", z);
    const double re = value.real();
    const double ratio = std::abs((1.0 - value) / value);
    if (re < report.min_re_h) {
      report.min_re_h = re;
      report.min_re_h_at = z;
    }
    if (ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.max_ratio_at = z;
    }
    const bool half_plane = re >= 0.5;
    const bool disk = ratio <= 1.0;
    if (half_plane != disk && std::abs(re - 0.5) > tol && std::abs(ratio - 1.0) > tol) {
      ++report.disagreements;
    }
    ++report.samples;
  }
  report.conditions_agree = report.disagreements == 0;
  report.pass = report.min_re_h >= 0.5 - tol;
  return report;
}

// ---------------------------------------------------------------------------

namespace {

cplx derivative_ratio(const MeromorphicFn& f, const MeromorphicFn& g, cplx z) {
  const cplx fd = f.jet<1>(z).d1();
  const cplx gd = g.jet<1>(z).d1();
  if (is_zero(fd)) throw Error(ErrorKind::CriticalPoint, "f' vanishes", z);
  return gd / fd;
}

// Branch of log(g'/f') at z continued inward from kBranchContinuationRadius.
cplx continued_log_ratio(const MeromorphicFn& f, const MeromorphicFn& g, cplx z) {
  const double target = std::abs(z);
  auto bad = [](cplx r) {
    return is_zero(r) || !std::isfinite(r.real()) || !std::isfinite(r.imag());
  };
  if (target >= kBranchContinuationRadius) {
    const cplx r = derivative_ratio(f, g, z);
    if (bad(r)) throw Error(ErrorKind::BranchTrackingFailure, "derivative ratio degenerate", z);
    return std::log(r);
  }
  const cplx direction = z / target;
  constexpr int kNominalSteps = 64;
  constexpr int kMaxHalvings = 40;
  double log_step = std::log(kBranchContinuationRadius / target) / kNominalSteps;

  double radius = kBranchContinuationRadius;
  cplx previous = derivative_ratio(f, g, direction * radius);
  if (bad(previous)) throw Error(ErrorKind::BranchTrackingFailure, "derivative ratio degenerate at start", z);
  cplx branch = std::log(previous);
  int halvings = 0;
  while (radius > target) {
    double next_radius = radius * std::exp(-log_step);
    const bool last = next_radius <= target;
    const cplx point = last ? z : direction * next_radius;
    cplx ratio;
    try {
      ratio = derivative_ratio(f, g, point);
    } catch (const Error& e) {
      throw Error(ErrorKind::BranchTrackingFailure, e.what(), point);
    }
    if (bad(ratio)) throw Error(ErrorKind::BranchTrackingFailure, "derivative ratio crosses 0", point);
    const cplx increment = std::log(ratio / previous);
    if (std::abs(increment.imag()) > std::numbers::pi / 2.0) {
      if (++halvings > kMaxHalvings) {
        throw Error(ErrorKind::BranchTrackingFailure, "step halving did not resolve branch", point);
      }
      log_step *= 0.5;
      continue;
    }
    branch += increment;
    previous = ratio;
    radius = last ? target : next_radius;
  }
  return branch;
}

}  // namespace

ComplexJet power_branch(const MeromorphicFn& f, const MeromorphicFn& g, cplx alpha, cplx z) {
  if (std::abs(z) < 1.0 - 1e-12) throw Error(ErrorKind::OutsideDomain, "power_branch requires |z| >= 1", z);
  const TaylorJet<4> fj = f.jet<4>(z);
  const TaylorJet<4> gj = g.jet<4>(z);
  if (is_critical(fj, z)) throw Error(ErrorKind::CriticalPoint, "f' vanishes", z);
  if (is_critical(gj, z)) throw Error(ErrorKind::CriticalPoint, "g' vanishes", z);
  const TaylorJet<3> fprime = fj.differentiate();
  const TaylorJet<3> gprime = gj.differentiate();
  if (alpha == cplx{0.0, 0.0}) return ComplexJet::constant(1.0);
  const ComplexJet ratio = gprime / fprime;
  const cplx branch = continued_log_ratio(f, g, z);
  return exp(alpha * log_on_branch(ratio, branch));
}

}  // namespace univalence

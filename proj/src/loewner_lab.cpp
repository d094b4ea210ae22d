#include "univalence/loewner_lab.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "univalence/oracle.hpp"
#include "univalence/parallel.hpp"

namespace univalence {

namespace {

// z must lie in the closed unit disk minus the origin, so that
// zeta = e^t / z lies in the closed exterior disk.
void require_chain_domain(cplx z, double t) {
  if (z == cplx{0.0, 0.0}) throw Error(ErrorKind::OutsideDomain, "chain is not evaluated at z = 0", z);
  if (std::abs(z) > 1.0 + 1e-12) throw Error(ErrorKind::OutsideDomain, "chain requires |z| <= 1", z);
  if (!(t >= 0.0)) throw Error(ErrorKind::OutsideDomain, "chain requires t >= 0", z);
}

}  // namespace

cplx chain_eval(const ChainSpec& spec, cplx z, double t) {
  require_chain_domain(z, t);
  const cplx zeta = std::exp(t) / z;
  const ComplexJet v = power_branch(spec.f, spec.g, spec.alpha, zeta);
  const ComplexJet u = spec.f.jet<3>(zeta) * v;
  const cplx h = spec.h(zeta);
  // (e^-t - e^t)/z = e^-t/z - zeta; grouping u - zeta h u' first keeps the
  // cancellation between the two large terms exact when it is exact in u.
  const cplx near = std::exp(-t) / z * h;
  const cplx num = (u.value() - zeta * h * u.d1()) + near * u.d1();
  const cplx den = (v.value() - zeta * h * v.d1()) + near * v.d1();
  const double num_scale = std::abs(u.value()) + std::abs(zeta * h * u.d1());
  const double den_scale = std::abs(v.value()) + std::abs(zeta * h * v.d1());
  if (std::abs(num) <= 1e-14 * num_scale || std::abs(den) <= 1e-14 * den_scale) {
    throw Error(ErrorKind::DenominatorVanishes, "chain quotient degenerates", z);
  }
  return 1.0 / (num / den);
}

cplx chain_w(const ChainSpec& spec, cplx z, double t) {
  require_chain_domain(z, t);
  const double et = std::exp(t);
  const double e2t = et * et;
  const cplx zeta = et / z;
  const PointTerms p = point_terms(spec.f, &spec.g, &spec.h, zeta);
  const cplx a = spec.alpha;
  const cplx diff = p.pre_f - p.pre_g;
  const cplx diff_term = spec.squared_variant ? diff * diff : diff;
  const double shrink = std::exp(-2.0 * t) - 1.0;
  return e2t * (1.0 - p.h) / p.h +
         (1.0 - e2t) * zeta * (p.h_prime / p.h + (1.0 - 2.0 * a) * p.pre_f + 2.0 * a * p.pre_g) +
         a * e2t * shrink * shrink * (e2t / (z * z)) * p.h *
             ((p.schwarz_f - p.schwarz_g) + (a - 0.5) * diff_term);
}

cplx chain_p_from_w(cplx w) {
  if (w == cplx{1.0, 0.0}) throw Error(ErrorKind::WEqualsOne, "w = 1 has no half-plane image");
  return (1.0 + w) / (1.0 - w);
}

cplx chain_p(const ChainSpec& spec, cplx z, double t) { return chain_p_from_w(chain_w(spec, z, t)); }

cplx extract_a1(const ChainSpec& spec, double t, double circle_radius, std::size_t node_count) {
  if (!(circle_radius > 0.0 && circle_radius < 1.0) || node_count == 0) {
    throw Error(ErrorKind::ContourThroughSingularity, "contour radius must lie in (0, 1)");
  }
  cplx sum{0.0, 0.0};
  for (std::size_t k = 0; k < node_count; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(node_count);
    const cplx z = std::polar(circle_radius, theta);
    cplx value;
    try {
      value = chain_eval(spec, z, t);
    } catch (const Error& e) {
      throw Error(ErrorKind::ContourThroughSingularity, e.what(), z);
    }
    sum += value / z;
  }
  return sum / static_cast<double>(node_count);
}

A1Estimate extract_a1_checked(const ChainSpec& spec, double t, double circle_radius, std::size_t node_count) {
  A1Estimate e;
  e.t = t;
  e.value = extract_a1(spec, t, circle_radius, node_count);
  e.doubled_value = extract_a1(spec, t, circle_radius, 2 * node_count);
  const double et = std::exp(t);
  e.residual = std::abs(e.value - et) / et;
  e.flagged = std::abs(e.doubled_value - e.value) >= 1e-9 * std::max(1.0, std::abs(e.value));
  return e;
}

SubordinationResult subordination_check(const ChainSpec& spec, double t, double s, double r,
                                        std::size_t boundary_nodes, std::size_t probe_nodes) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::ContourThroughSingularity, "radius must lie in (0, 1)");
  std::vector<cplx> contour;
  contour.reserve(boundary_nodes + 1);
  for (std::size_t k = 0; k < boundary_nodes; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(boundary_nodes);
    const cplx z = std::polar(r, theta);
    try {
      contour.push_back(chain_eval(spec, z, s));
    } catch (const Error& e) {
      throw Error(ErrorKind::ContourThroughSingularity, e.what(), z);
    }
  }
  contour.push_back(contour.front());

  SubordinationResult result;
  for (std::size_t k = 0; k < probe_nodes; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(probe_nodes);
    const cplx probe = std::polar(0.9 * r, theta);
    cplx image;
    try {
      image = chain_eval(spec, probe, t);
    } catch (const Error& e) {
      throw Error(ErrorKind::ContourThroughSingularity, e.what(), probe);
    }
    int winding = 0;
    try {
      winding = winding_number(contour, image);
    } catch (const Error&) {
      winding = 0;
    }
    if (winding != 1) {
      result.holds = false;
      result.failures.push_back(probe);
    }
  }
  return result;
}

std::vector<cplx> default_audit_z_samples() {
  std::vector<cplx> zs;
  for (double radius : {0.5, 0.9, 1.0}) {
    for (int k = 0; k < 64; ++k) zs.push_back(std::polar(radius, 2.0 * std::numbers::pi * k / 64.0));
  }
  return zs;
}

std::vector<double> default_audit_t_samples() { return {0.0, 0.25, 0.5, 1.0, 2.0, 4.0}; }

namespace {

struct SampleOutcome {
  bool ok = false;
  cplx w;
  cplx p;
  double bounded = 0.0;
  double lipschitz = 0.0;
  std::string message;
};

}  // namespace

AuditReport audit_pommerenke(const ChainSpec& spec, const std::vector<cplx>& z_samples,
                             const std::vector<double>& t_samples, const AuditOptions& options) {
  std::vector<ChainSample> samples;
  samples.reserve(z_samples.size() * t_samples.size());
  for (double t : t_samples) {
    for (cplx z : z_samples) samples.push_back({z, t});
  }
  const auto outcomes = parallel_map(
      samples,
      [&](const ChainSample& s) {
        SampleOutcome o;
        try {
          o.w = chain_w(spec, s.z, s.t);
          o.p = chain_p_from_w(o.w);
          const cplx value = chain_eval(spec, s.z, s.t);
          const cplx later = chain_eval(spec, s.z, s.t + options.time_step);
          o.bounded = std::abs(value) / std::exp(s.t);
          o.lipschitz = std::abs(later - value) / options.time_step;
          o.ok = true;
        } catch (const Error& e) {
          o.message = e.what();
        }
        return o;
      },
      options.workers);

  AuditReport report;
  bool first = true;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const SampleOutcome& o = outcomes[i];
    if (!o.ok) {
      report.errors.push_back({samples[i], o.message});
      continue;
    }
    ++report.samples;
    const double abs_w = std::abs(o.w);
    if (first || abs_w > report.max_abs_w) {
      report.max_abs_w = abs_w;
      report.witness_w = samples[i];
    }
    if (first || o.p.real() < report.min_re_p) {
      report.min_re_p = o.p.real();
      report.witness_p = samples[i];
    }
    first = false;
    if (abs_w >= 1.0) report.w_violations.push_back({samples[i], abs_w});
    report.boundedness_proxy = std::max(report.boundedness_proxy, o.bounded);
    report.time_lipschitz_proxy = std::max(report.time_lipschitz_proxy, o.lipschitz);
  }

  for (double t : t_samples) {
    try {
      report.a1.push_back(extract_a1_checked(spec, t, options.a1_circle_radius, options.a1_nodes));
    } catch (const Error& e) {
      report.errors.push_back({{cplx{0.0, 0.0}, t}, e.what()});
    }
  }

  for (std::size_t i = 0; i + 1 < t_samples.size(); ++i) {
    const double t = t_samples[i];
    const double s = t_samples[i + 1];
    try {
      const auto result = subordination_check(spec, t, s, options.subordination_radius, options.boundary_nodes,
                                              options.probe_nodes);
      ++report.subordination_pairs_checked;
      for (cplx probe : result.failures) report.subordination_failures.push_back({t, s, probe});
    } catch (const Error& e) {
      report.errors.push_back({{cplx{0.0, 0.0}, t}, e.what()});
    }
  }

  bool a1_ok = true;
  for (const auto& e : report.a1) a1_ok = a1_ok && e.residual <= options.a1_tol;
  report.pass = report.samples > 0 && report.max_abs_w < 1.0 && report.min_re_p > 0.0 && a1_ok &&
                report.subordination_failures.empty() && report.errors.empty();
  return report;
}

}  // namespace univalence

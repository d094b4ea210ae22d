#pragma once

// The Loewner chain built from (f, g, h, alpha) and numeric audits of the
// Pommerenke conditions for it.
//
// With zeta = e^t / z, v = (g'/f')^alpha on the branch v(inf) = 1 and
// u = f v, the chain is
//
//   L(z, t) = [ (u + (e^-t - e^t) h u' / z) / (v + (e^-t - e^t) h v' / z) ]^-1
//
// and w = (p - 1)/(p + 1) is evaluated in closed form from the jets of f, g
// and h at zeta.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "univalence/criteria.hpp"

namespace univalence {

struct ChainSpec {
  MeromorphicFn f = identity_fn();
  MeromorphicFn g = identity_fn();
  HFunction h = constant_one_h();
  cplx alpha{0.5, 0.0};
  bool squared_variant = true;
};

/// Throws DenominatorVanishes, CriticalPoint, OutsideDomain (|z| > 1 or z = 0,
/// or t < 0).
cplx chain_eval(const ChainSpec& spec, cplx z, double t);

/// Throws HVanishes, CriticalPoint, OutsideDomain.
cplx chain_w(const ChainSpec& spec, cplx z, double t);

/// (1 + w) / (1 - w); throws WEqualsOne.
cplx chain_p_from_w(cplx w);
cplx chain_p(const ChainSpec& spec, cplx z, double t);

/// First Taylor coefficient of z -> L(z, t) by the trapezoidal rule on
/// |z| = circle_radius. Throws ContourThroughSingularity.
cplx extract_a1(const ChainSpec& spec, double t, double circle_radius = 0.5, std::size_t node_count = 256);

struct A1Estimate {
  double t = 0.0;
  cplx value;          // node_count nodes
  cplx doubled_value;  // 2 x node_count nodes
  double residual = 0.0;  // |a1 - e^t| / e^t
  bool flagged = false;   // doubling moved the estimate by >= 1e-9
};

A1Estimate extract_a1_checked(const ChainSpec& spec, double t, double circle_radius = 0.5,
                              std::size_t node_count = 256);

struct SubordinationResult {
  bool holds = true;
  std::vector<cplx> failures;  // probe points whose image is not enclosed once
};

/// Checks L(., t) < L(., s) on |z| <= r: every image of the probe circle
/// 0.9 r at time t must have winding number 1 with respect to the image of
/// the circle r at time s.
SubordinationResult subordination_check(const ChainSpec& spec, double t, double s, double r,
                                        std::size_t boundary_nodes = 256, std::size_t probe_nodes = 32);

struct ChainSample {
  cplx z;
  double t = 0.0;
};

struct AuditOptions {
  double a1_circle_radius = 0.5;
  std::size_t a1_nodes = 256;
  double a1_tol = 1e-6;
  double subordination_radius = 0.5;
  std::size_t boundary_nodes = 256;
  std::size_t probe_nodes = 32;
  double time_step = 1e-4;  // for the Lipschitz-in-t proxy
  std::size_t workers = 1;
};

struct AuditError {
  ChainSample at;
  std::string message;
};

struct SubordinationFailure {
  double t = 0.0;
  double s = 0.0;
  cplx probe;
};

struct WViolation {
  ChainSample at;
  double abs_w = 0.0;
};

struct AuditReport {
  double max_abs_w = 0.0;
  ChainSample witness_w;
  double min_re_p = 0.0;
  ChainSample witness_p;
  std::vector<A1Estimate> a1;
  std::vector<SubordinationFailure> subordination_failures;
  std::size_t subordination_pairs_checked = 0;
  double boundedness_proxy = 0.0;    // max |L(z, t)| / e^t
  double time_lipschitz_proxy = 0.0; // max |L(z, t + dt) - L(z, t)| / dt
  std::vector<WViolation> w_violations;  // samples with |w| >= 1
  std::vector<AuditError> errors;
  std::size_t samples = 0;
  bool pass = false;
};

/// Default z grid: circles 0.5, 0.9, 1.0 with 64 angles each.
std::vector<cplx> default_audit_z_samples();

/// Default t grid: 0, 0.25, 0.5, 1, 2, 4.
std::vector<double> default_audit_t_samples();

/// Evaluates w, p and the proxies at every (t, z) (t-major), a1 at every t
/// and subordination for consecutive t. Evaluation errors are recorded
/// per sample and make the audit fail.
AuditReport audit_pommerenke(const ChainSpec& spec, const std::vector<cplx>& z_samples,
                             const std::vector<double>& t_samples, const AuditOptions& options = {});

}  // namespace univalence

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "univalence/cli.hpp"
#include "univalence/criteria.hpp"
#include "univalence/differential.hpp"
#include "univalence/loewner_lab.hpp"
#include "univalence/oracle.hpp"
#include "univalence/region_scan.hpp"
#include "univalence/spec_parser.hpp"

namespace py = pybind11;
using namespace univalence;

namespace {

std::vector<cplx> jet_list(const ComplexJet& j) { return {j.value(), j.d1(), j.d2(), j.d3()}; }

CriterionParams params(const std::string& f, const std::string& g, const std::string& h, cplx alpha,
                       const std::string& criterion, bool squared_variant) {
  CriterionParams p;
  p.f = parse_function(f);
  p.g = parse_function(g);
  p.h = parse_h_function(h);
  p.alpha = alpha;
  const auto id = parse_criterion(criterion);
  if (!id) throw Error(ErrorKind::UsageError, "unknown criterion '" + criterion + "'");
  p.criterion = *id;
  p.squared_variant = squared_variant;
  return normalize_params(std::move(p));
}

ChainSpec chain(const std::string& f, const std::string& g, const std::string& h, cplx alpha, bool squared_variant) {
  ChainSpec s;
  s.f = parse_function(f);
  s.g = parse_function(g);
  s.h = parse_h_function(h);
  s.alpha = alpha;
  s.squared_variant = squared_variant;
  return s;
}

SamplingPlan plan_of(double r_min, double r_max, std::size_t radial, std::size_t angular, std::size_t refine) {
  SamplingPlan plan;
  plan.r_min = r_min;
  plan.r_max = r_max;
  plan.radial_count = radial;
  plan.angular_count = angular;
  plan.refine_depth = refine;
  return plan;
}

}  // namespace

PYBIND11_MODULE(_univalence, m) {
  m.doc() = "Numerical univalence criteria for meromorphic functions on |z| > 1";

  static py::exception<Error> error(m, "UnivalenceError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object kind = py::str(std::string(to_string(e.kind())));
      PyErr_SetObject(error.ptr(), py::make_tuple(py::str(e.what()), kind).ptr());
    }
  });

  m.def("canonical_function", [](const std::string& f) { return to_spec_string(parse_function(f)); }, py::arg("f"));
  m.def("evaluate", [](const std::string& f, cplx z) { return parse_function(f)(z); }, py::arg("f"), py::arg("z"));
  m.def("derivatives", [](const std::string& f, cplx z) { return jet_list(derivatives_of(parse_function(f), z)); },
        py::arg("f"), py::arg("z"), "[f, f', f'', f'''] at z (|z| > 1)");
  m.def("pre_schwarzian", [](const std::string& f, cplx z) { return pre_schwarzian(parse_function(f), z); },
        py::arg("f"), py::arg("z"));
  m.def("schwarzian", [](const std::string& f, cplx z) { return schwarzian(parse_function(f), z); }, py::arg("f"),
        py::arg("z"));

  m.def(
      "criterion_lhs",
      [](cplx z, const std::string& f, const std::string& g, const std::string& h, cplx alpha,
         const std::string& criterion, bool squared_variant) {
        return corollary_lhs(params(f, g, h, alpha, criterion, squared_variant), z);
      },
      py::arg("z"), py::arg("f") = "identity", py::arg("g") = "identity", py::arg("h") = "hconst",
      py::arg("alpha") = cplx{0.5, 0.0}, py::arg("criterion") = "theorem1", py::arg("squared_variant") = true);

  m.def(
      "estimate_sup",
      [](const std::string& f, const std::string& g, const std::string& h, cplx alpha, const std::string& criterion,
         bool squared_variant, double r_min, double r_max, std::size_t radial, std::size_t angular,
         std::size_t refine, double tol, std::size_t workers) {
        ScanOptions options;
        options.workers = workers;
        const SupReport r = estimate_sup(params(f, g, h, alpha, criterion, squared_variant),
                                         plan_of(r_min, r_max, radial, angular, refine), options);
        const Verdict v = issue_verdict(r, tol);
        py::dict out;
        out["sup"] = r.sup_estimate;
        out["argmax"] = r.argmax;
        out["argmax_at_tail"] = r.argmax_at_tail;
        out["tail"] = r.tail_estimate;
        out["converged"] = r.refinement_converged;
        out["samples"] = r.samples_evaluated;
        out["verdict"] = std::string(to_string(v.outcome));
        out["margin"] = v.margin;
        return out;
      },
      py::arg("f") = "identity", py::arg("g") = "identity", py::arg("h") = "hconst", py::arg("alpha") = cplx{0.5, 0.0},
      py::arg("criterion") = "theorem1", py::arg("squared_variant") = true, py::arg("r_min") = 1.001,
      py::arg("r_max") = 50.0, py::arg("radial") = 64, py::arg("angular") = 128, py::arg("refine") = 2,
      py::arg("tol") = kDefaultVerdictTol, py::arg("workers") = 1);

  m.def(
      "chain_eval",
      [](cplx z, double t, const std::string& f, const std::string& g, const std::string& h, cplx alpha) {
        return chain_eval(chain(f, g, h, alpha, true), z, t);
      },
      py::arg("z"), py::arg("t"), py::arg("f") = "identity", py::arg("g") = "identity", py::arg("h") = "hconst",
      py::arg("alpha") = cplx{0.5, 0.0});
  m.def(
      "chain_w",
      [](cplx z, double t, const std::string& f, const std::string& g, const std::string& h, cplx alpha,
         bool squared_variant) { return chain_w(chain(f, g, h, alpha, squared_variant), z, t); },
      py::arg("z"), py::arg("t"), py::arg("f") = "identity", py::arg("g") = "identity", py::arg("h") = "hconst",
      py::arg("alpha") = cplx{0.5, 0.0}, py::arg("squared_variant") = true);
  m.def(
      "extract_a1",
      [](double t, const std::string& f, const std::string& g, const std::string& h, cplx alpha) {
        return extract_a1(chain(f, g, h, alpha, true), t);
      },
      py::arg("t"), py::arg("f") = "identity", py::arg("g") = "identity", py::arg("h") = "hconst",
      py::arg("alpha") = cplx{0.5, 0.0});

  m.def(
      "injectivity_scan",
      [](const std::string& f, double r_min, double r_max, std::size_t radial, std::size_t angular,
         std::optional<double> collision_tolerance, std::optional<double> separation_floor) {
        InjectivityOptions options;
        options.collision_tolerance = collision_tolerance;
        options.separation_floor = separation_floor;
        const auto report = injectivity_scan(parse_function(f), plan_of(r_min, r_max, radial, angular, 0), options);
        py::list collisions;
        for (const auto& c : report.collisions) {
          py::dict d;
          d["z1"] = c.z1;
          d["z2"] = c.z2;
          d["image_distance"] = c.image_distance;
          d["domain_distance"] = c.domain_distance;
          collisions.append(d);
        }
        return collisions;
      },
      py::arg("f"), py::arg("r_min") = 1.001, py::arg("r_max") = 50.0, py::arg("radial") = 64,
      py::arg("angular") = 128, py::arg("collision_tolerance") = py::none(), py::arg("separation_floor") = py::none());

  m.def("winding_number", &winding_number, py::arg("contour"), py::arg("point"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> full{"univalence"};
        full.insert(full.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : full) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line front end; returns (exit_code, stdout, stderr).");
}

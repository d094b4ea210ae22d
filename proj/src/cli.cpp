#include "univalence/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "univalence/criteria.hpp"
#include "univalence/format.hpp"
#include "univalence/loewner_lab.hpp"
#include "univalence/oracle.hpp"
#include "univalence/region_scan.hpp"
#include "univalence/spec_parser.hpp"

namespace univalence::cli {

using nlohmann::json;

namespace {

constexpr std::string_view kBasisNote =
    "sample-based: pass means the criterion held at every sample and in the extrapolated tail; "
    "it is a sufficient condition only and is not a proof of univalence";

json complex_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

cplx complex_from_json(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

std::optional<Command> parse_command(std::string_view name) {
  for (Command c : {Command::check, Command::sweep, Command::chain, Command::oracle, Command::catalog}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

CriterionId criterion_of(const RunConfig& config) {
  auto id = parse_criterion(config.criterion);
  if (!id) throw Error(ErrorKind::UsageError, "unknown criterion '" + config.criterion + "'");
  return *id;
}

CriterionParams params_of(const RunConfig& config) {
  CriterionParams p;
  p.f = parse_function(config.f);
  p.g = parse_function(config.g);
  p.h = parse_h_function(config.h);
  p.alpha = config.alpha;
  p.criterion = criterion_of(config);
  p.squared_variant = config.squared_variant;
  return normalize_params(std::move(p));
}

json scan_json(const SupReport& report, const Verdict& verdict) {
  return json{
      {"sup", report.sup_estimate},
      {"argmax", complex_json(report.argmax)},
      {"argmax_at_tail", report.argmax_at_tail},
      {"tail", report.tail_estimate},
      {"converged", report.refinement_converged},
      {"samples", report.samples_evaluated},
      {"verdict", std::string(to_string(verdict.outcome))},
      {"margin", verdict.margin},
      {"tol", verdict.tol},
  };
}

int exit_for(Outcome o) {
  switch (o) {
    case Outcome::pass: return kExitPass;
    case Outcome::fail: return kExitFail;
    case Outcome::inconclusive: return kExitInconclusive;
  }
  return kExitError;
}

void write_grid(const RunConfig& config, const SupReport& report) {
  if (!config.grid_csv_path) return;
  std::ofstream out(*config.grid_csv_path);
  if (!out) throw Error(ErrorKind::UsageError, "cannot open grid CSV path '" + *config.grid_csv_path + "'");
  write_grid_csv(out, report.grid);
}

json run_check(const RunConfig& config, int& exit_code) {
  const CriterionParams p = params_of(config);
  ScanOptions options;
  options.workers = config.workers;
  options.record_grid = config.grid_csv_path.has_value();
  const SupReport report = estimate_sup(p, config.plan, options);
  write_grid(config, report);
  const Verdict verdict = issue_verdict(report, config.tol);
  exit_code = exit_for(verdict.outcome);
  json result = scan_json(report, verdict);
  result["criterion"] = config.criterion;
  result["basis"] = kBasisNote;
  return result;
}

json run_sweep(const RunConfig& config, int& exit_code) {
  const std::vector<cplx> alphas = config.alphas.empty() ? std::vector<cplx>{config.alpha} : config.alphas;
  std::vector<bool> variants;
  if (config.both_variants) {
    variants = {true, false};
  } else {
    variants = {config.squared_variant};
  }
  ScanOptions options;
  options.workers = config.workers;
  json rows = json::array();
  bool any_fail = false;
  bool any_inconclusive = false;
  for (cplx alpha : alphas) {
    for (bool squared : variants) {
      RunConfig row_config = config;
      row_config.alpha = alpha;
      row_config.squared_variant = squared;
      const CriterionParams p = params_of(row_config);
      const SupReport report = estimate_sup(p, config.plan, options);
      const Verdict verdict = issue_verdict(report, config.tol);
      any_fail = any_fail || verdict.outcome == Outcome::fail;
      any_inconclusive = any_inconclusive || verdict.outcome == Outcome::inconclusive;
      json row = scan_json(report, verdict);
      row["alpha"] = complex_json(alpha);
      row["squared_variant"] = squared;
      rows.push_back(std::move(row));
    }
  }
  exit_code = any_fail ? kExitFail : (any_inconclusive ? kExitInconclusive : kExitPass);
  return json{{"rows", std::move(rows)}, {"basis", kBasisNote}};
}

json sample_json(const ChainSample& s) { return json{{"z", complex_json(s.z)}, {"t", s.t}}; }

json run_chain(const RunConfig& config, int& exit_code) {
  ChainSpec spec;
  spec.f = parse_function(config.f);
  spec.g = parse_function(config.g);
  spec.h = parse_h_function(config.h);
  spec.alpha = config.alpha;
  spec.squared_variant = config.squared_variant;
  std::vector<cplx> zs;
  for (double r : config.z_radii) {
    for (std::size_t k = 0; k < config.z_angles; ++k) {
      zs.push_back(std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(config.z_angles)));
    }
  }
  AuditOptions options;
  options.workers = config.workers;
  const AuditReport audit = audit_pommerenke(spec, zs, config.t_samples, options);
  exit_code = audit.pass ? kExitPass : kExitFail;

  json a1 = json::array();
  for (const auto& e : audit.a1) {
    a1.push_back({{"t", e.t}, {"value", complex_json(e.value)}, {"residual", e.residual}, {"flagged", e.flagged}});
  }
  json failures = json::array();
  for (const auto& f : audit.subordination_failures) {
    failures.push_back({{"t", f.t}, {"s", f.s}, {"probe", complex_json(f.probe)}});
  }
  json violations = json::array();
  for (const auto& v : audit.w_violations) {
    violations.push_back({{"at", sample_json(v.at)}, {"abs_w", v.abs_w}});
  }
  json errors = json::array();
  for (const auto& e : audit.errors) errors.push_back({{"at", sample_json(e.at)}, {"message", e.message}});
  return json{
      {"max_abs_w", audit.max_abs_w},
      {"witness_w", sample_json(audit.witness_w)},
      {"min_re_p", audit.min_re_p},
      {"witness_p", sample_json(audit.witness_p)},
      {"a1", std::move(a1)},
      {"subordination", {{"pairs_checked", audit.subordination_pairs_checked}, {"failures", std::move(failures)}}},
      {"boundedness_proxy", audit.boundedness_proxy},
      {"time_lipschitz_proxy", audit.time_lipschitz_proxy},
      {"w_violations", std::move(violations)},
      {"errors", std::move(errors)},
      {"samples", audit.samples},
      {"pass", audit.pass},
  };
}

json run_oracle(const RunConfig& config, int& exit_code) {
  const MeromorphicFn f = parse_function(config.f);
  InjectivityOptions options;
  options.collision_tolerance = config.collision_tolerance;
  options.separation_floor = config.separation_floor;
  const CollisionReport report = injectivity_scan(f, config.plan, options);
  exit_code = report.collisions.empty() ? kExitPass : kExitFail;
  json collisions = json::array();
  for (const auto& c : report.collisions) {
    collisions.push_back({{"z1", complex_json(c.z1)},
                          {"z2", complex_json(c.z2)},
                          {"image_distance", c.image_distance},
                          {"domain_distance", c.domain_distance}});
  }
  return json{
      {"collisions", std::move(collisions)},
      {"grid_size", report.grid_size},
      {"collision_tolerance", report.collision_tolerance},
      {"separation_floor", report.separation_floor},
      {"candidates_examined", report.candidates_examined},
  };
}

json catalog_json() {
  return json{
      {"functions",
       json::array({
           {{"syntax", "identity"}, {"description", "z"}},
           {{"syntax", "joukowski:<re>[,<im>]"}, {"description", "z + c/z"}},
           {{"syntax", "laurent:<b>;<b0>;<b1>;..."}, {"description", "b z + b0 + b1/z + b2/z^2 + ..."}},
           {{"syntax", "moebius:<a>,<b>,<c>,<d>:<inner>"}, {"description", "(a F + b)/(c F + d), real coefficients"}},
           {{"syntax", "moebius:<a>;<b>;<c>;<d>:<inner>"}, {"description", "(a F + b)/(c F + d), complex coefficients"}},
       })},
      {"h_functions",
       json::array({
           {{"syntax", "hconst"}, {"description", "h = 1"}},
           {{"syntax", "hinvsq:<c>"}, {"description", "h = 1 + c/z^2"}},
           {{"syntax", "heven:<h2>;<h4>;..."}, {"description", "h = 1 + h2/z^2 + h4/z^4 + ..."}},
           {{"syntax", "hlaurent:<h1>;<h2>;..."}, {"description", "inverse-power series; odd terms must vanish"}},
       })},
      {"criteria", json::array({"theorem1", "alpha_zero", "miazga_wesolowski", "epstein", "becker", "nehari"})},
  };
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) values.push_back(parse_complex(item).real());
  if (values.empty()) throw Error(ErrorKind::UsageError, "empty list '" + text + "'");
  return values;
}

std::vector<cplx> parse_alpha_list(const std::string& text) {
  std::vector<cplx> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) values.push_back(parse_complex(item));
  if (values.empty()) throw Error(ErrorKind::UsageError, "empty alpha list");
  return values;
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::check: return "check";
    case Command::sweep: return "sweep";
    case Command::chain: return "chain";
    case Command::oracle: return "oracle";
    case Command::catalog: return "catalog";
  }
  return "check";
}

RunConfig resolve(const RunConfig& config) {
  RunConfig r = config;
  validate_plan(r.plan);
  r.f = to_spec_string(parse_function(r.f));
  r.g = to_spec_string(parse_function(r.g));
  r.h = to_spec_string(parse_h_function(r.h));
  if (r.command == Command::check || r.command == Command::sweep) {
    const CriterionParams p = params_of(r);
    r.g = to_spec_string(p.g);
    r.h = to_spec_string(p.h);
    r.alpha = p.alpha;
  }
  if (r.z_angles == 0) throw Error(ErrorKind::UsageError, "--z-angles must be positive");
  return r;
}

json config_to_json(const RunConfig& c) {
  json alphas = json::array();
  for (cplx a : c.alphas) alphas.push_back(complex_json(a));
  return json{
      {"command", std::string(to_string(c.command))},
      {"f", c.f},
      {"g", c.g},
      {"h", c.h},
      {"alpha", complex_json(c.alpha)},
      {"criterion", c.criterion},
      {"squared_variant", c.squared_variant},
      {"plan",
       {{"r_min", c.plan.r_min},
        {"r_max", c.plan.r_max},
        {"radial_count", c.plan.radial_count},
        {"angular_count", c.plan.angular_count},
        {"refine_depth", c.plan.refine_depth},
        {"refine_factor", c.plan.refine_factor}}},
      {"tol", c.tol},
      {"alphas", std::move(alphas)},
      {"both_variants", c.both_variants},
      {"t_samples", c.t_samples},
      {"z_radii", c.z_radii},
      {"z_angles", c.z_angles},
      {"collision_tolerance", c.collision_tolerance ? json(*c.collision_tolerance) : json(nullptr)},
      {"separation_floor", c.separation_floor ? json(*c.separation_floor) : json(nullptr)},
  };
}

RunConfig config_from_json(const json& input) {
  const json& j = input.contains("config") ? input.at("config") : input;
  try {
    RunConfig c;
    const auto command = parse_command(j.at("command").get<std::string>());
    if (!command) throw Error(ErrorKind::UsageError, "unknown command in config");
    c.command = *command;
    c.f = j.at("f").get<std::string>();
    c.g = j.at("g").get<std::string>();
    c.h = j.at("h").get<std::string>();
    c.alpha = complex_from_json(j.at("alpha"));
    c.criterion = j.at("criterion").get<std::string>();
    c.squared_variant = j.at("squared_variant").get<bool>();
    const json& plan = j.at("plan");
    c.plan.r_min = plan.at("r_min").get<double>();
    c.plan.r_max = plan.at("r_max").get<double>();
    c.plan.radial_count = plan.at("radial_count").get<std::size_t>();
    c.plan.angular_count = plan.at("angular_count").get<std::size_t>();
    c.plan.refine_depth = plan.at("refine_depth").get<std::size_t>();
    c.plan.refine_factor = plan.at("refine_factor").get<std::size_t>();
    c.tol = j.at("tol").get<double>();
    c.alphas.clear();
    for (const auto& a : j.at("alphas")) c.alphas.push_back(complex_from_json(a));
    c.both_variants = j.at("both_variants").get<bool>();
    c.t_samples = j.at("t_samples").get<std::vector<double>>();
    c.z_radii = j.at("z_radii").get<std::vector<double>>();
    c.z_angles = j.at("z_angles").get<std::size_t>();
    if (!j.at("collision_tolerance").is_null()) c.collision_tolerance = j.at("collision_tolerance").get<double>();
    if (!j.at("separation_floor").is_null()) c.separation_floor = j.at("separation_floor").get<double>();
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::UsageError, std::string("malformed config: ") + e.what());
  }
}

RunResult execute(const RunConfig& input) {
  const auto start = std::chrono::steady_clock::now();
  const RunConfig config = resolve(input);
  RunResult result;
  json report{{"schema", kSchemaVersion}, {"command", std::string(to_string(config.command))}};
  report["config"] = config_to_json(config);
  int exit_code = kExitError;
  switch (config.command) {
    case Command::check: report["result"] = run_check(config, exit_code); break;
    case Command::sweep: report["result"] = run_sweep(config, exit_code); break;
    case Command::chain: report["result"] = run_chain(config, exit_code); break;
    case Command::oracle: report["result"] = run_oracle(config, exit_code); break;
    case Command::catalog:
      report["result"] = catalog_json();
      exit_code = kExitPass;
      break;
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  report["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  result.exit_code = exit_code;
  result.report = std::move(report);
  return result;
}

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Numerical univalence criteria for meromorphic functions on |z| > 1", "univalence"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print this help message and exit");

  struct Raw {
    std::string f, g, h, alpha, criterion, alphas, t_samples, z_radii, config, json, grid_csv;
    double rmin = 0, rmax = 0, tol = 0, collision_tol = 0, separation = 0;
    std::size_t radial = 0, angular = 0, refine = 0, refine_factor = 0, z_angles = 0, workers = 1;
    long long seed = 0;
    bool unsquared = false, both_variants = false;
  } raw;

  std::map<std::string, CLI::Option*> opts;
  auto add_common = [&](CLI::App* sub) {
    opts["config"] = sub->add_option("--config", raw.config, "Load a resolved config block (or whole report)");
    opts["f"] = sub->add_option("--f", raw.f, "Function under test");
    opts["g"] = sub->add_option("--g", raw.g, "Comparison function g");
    opts["h"] = sub->add_option("--h", raw.h, "Auxiliary h-function");
    opts["alpha"] = sub->add_option("--alpha", raw.alpha, "Complex alpha as re or re,im");
    opts["criterion"] = sub->add_option("--criterion", raw.criterion, "theorem1|alpha_zero|miazga_wesolowski|epstein|becker|nehari");
    opts["unsquared"] = sub->add_flag("--unsquared", raw.unsquared, "Use the unsquared (f''/f' - g''/g') factor");
    opts["rmin"] = sub->add_option("--rmin", raw.rmin, "Inner sampling radius (> 1)");
    opts["rmax"] = sub->add_option("--rmax", raw.rmax, "Outer sampling radius");
    opts["radial"] = sub->add_option("--radial", raw.radial, "Radial sample count");
    opts["angular"] = sub->add_option("--angular", raw.angular, "Angular sample count");
    opts["refine"] = sub->add_option("--refine", raw.refine, "Refinement depth");
    opts["refine_factor"] = sub->add_option("--refine-factor", raw.refine_factor, "Refinement density factor");
    opts["tol"] = sub->add_option("--tol", raw.tol, "Verdict tolerance");
    opts["json"] = sub->add_option("--json", raw.json, "Write the JSON report to PATH");
    opts["grid_csv"] = sub->add_option("--grid-csv", raw.grid_csv, "Write evaluated samples as CSV");
    opts["t_samples"] = sub->add_option("--t-samples", raw.t_samples, "Comma-separated t values (chain)");
    opts["z_radii"] = sub->add_option("--z-radii", raw.z_radii, "Comma-separated |z| circles (chain)");
    opts["z_angles"] = sub->add_option("--z-angles", raw.z_angles, "Angles per z circle (chain)");
    opts["alphas"] = sub->add_option("--alphas", raw.alphas, "Semicolon-separated alpha list (sweep)");
    opts["both_variants"] = sub->add_flag("--both-variants", raw.both_variants, "Sweep squared and unsquared forms");
    opts["collision_tol"] = sub->add_option("--collision-tol", raw.collision_tol, "Collision tolerance (oracle)");
    opts["separation"] = sub->add_option("--separation", raw.separation, "Separation floor (oracle)");
    opts["workers"] = sub->add_option("--workers", raw.workers, "Worker threads for data-parallel scans");
    opts["seed"] = sub->add_option("--seed", raw.seed, "Reserved; every run is deterministic");
  };

  std::vector<std::pair<Command, CLI::App*>> subs;
  std::vector<std::map<std::string, CLI::Option*>> sub_opts;
  for (Command c : {Command::check, Command::sweep, Command::chain, Command::oracle, Command::catalog}) {
    CLI::App* sub = app.add_subcommand(std::string(to_string(c)));
    sub->set_help_flag("--help", "Print this help message and exit");
    opts.clear();
    add_common(sub);
    subs.emplace_back(c, sub);
    sub_opts.push_back(opts);
  }
  subs[0].second->description("Scan one criterion over the annulus and issue a verdict");
  subs[1].second->description("Scan a criterion across alpha values and/or both variants");
  subs[2].second->description("Audit the Loewner chain conditions");
  subs[3].second->description("Brute-force injectivity scan");
  subs[4].second->description("List built-in functions and h-functions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorKind::UsageError, e.what());
  }

  std::size_t index = 0;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].second->parsed()) index = i;
  }
  const auto& given = sub_opts[index];
  auto has = [&](const char* name) { return given.at(name)->count() > 0; };

  RunConfig c;
  if (has("config")) {
    std::ifstream in(raw.config);
    if (!in) throw Error(ErrorKind::UsageError, "cannot read config '" + raw.config + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw Error(ErrorKind::UsageError, std::string("config is not JSON: ") + e.what());
    }
    c = config_from_json(j);
  }
  c.command = subs[index].first;
  if (has("f")) c.f = raw.f;
  if (has("g")) c.g = raw.g;
  if (has("h")) c.h = raw.h;
  if (has("alpha")) c.alpha = parse_complex(raw.alpha);
  if (has("criterion")) {
    if (!parse_criterion(raw.criterion)) throw Error(ErrorKind::UsageError, "unknown criterion '" + raw.criterion + "'");
    c.criterion = raw.criterion;
  }
  if (has("unsquared")) c.squared_variant = !raw.unsquared;
  if (has("rmin")) c.plan.r_min = raw.rmin;
  if (has("rmax")) c.plan.r_max = raw.rmax;
  if (has("radial")) c.plan.radial_count = raw.radial;
  if (has("angular")) c.plan.angular_count = raw.angular;
  if (has("refine")) c.plan.refine_depth = raw.refine;
  if (has("refine_factor")) c.plan.refine_factor = raw.refine_factor;
  if (has("tol")) c.tol = raw.tol;
  if (has("json")) c.json_path = raw.json;
  if (has("grid_csv")) c.grid_csv_path = raw.grid_csv;
  if (has("t_samples")) c.t_samples = parse_real_list(raw.t_samples);
  if (has("z_radii")) c.z_radii = parse_real_list(raw.z_radii);
  if (has("z_angles")) c.z_angles = raw.z_angles;
  if (has("alphas")) c.alphas = parse_alpha_list(raw.alphas);
  if (has("both_variants")) c.both_variants = raw.both_variants;
  if (has("collision_tol")) c.collision_tolerance = raw.collision_tol;
  if (has("separation")) c.separation_floor = raw.separation;
  if (has("workers")) c.workers = raw.workers;
  return c;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const auto config = parse_command_line(argc, argv, out);
    if (!config) return kExitPass;
    const RunResult result = execute(*config);
    const std::string text = result.report.dump(2) + "\n";
    if (config->json_path) {
      std::ofstream file(*config->json_path);
      if (!file) throw Error(ErrorKind::UsageError, "cannot open report path '" + *config->json_path + "'");
      file << text;
    } else {
      out << text;
    }
    return result.exit_code;
  } catch (const Error& e) {
    err << "univalence: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "univalence: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace univalence::cli

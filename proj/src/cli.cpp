#include "bpsphere/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "CLI11.hpp"

#include "bpsphere/densities.hpp"
#include "bpsphere/measures.hpp"

namespace bpsphere::cli {

namespace {

using nlohmann::json;

std::uint64_t parse_count(const std::string& text, const char* flag) {
  double value = 0.0;
  std::size_t used = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": not a number: " + text);
  }
  if (used != text.size() || !(value >= 0.0) || value != std::floor(value) || value > 1e15)
    throw UsageError(std::string(flag) + ": expected a non-negative integer, got " + text);
  return static_cast<std::uint64_t>(value);
}

json report_json_of(const EstimatorReport& r) {
  return json{{"mean", r.mean}, {"stderr", r.std_error}, {"n", r.samples}, {"exact", r.exact},
              {"wall_time", r.wall_time}};
}

// Non-finite numbers become strings so the document stays valid JSON.
json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

json config_json(const RunConfig& c) {
  json j{{"command", c.command}, {"seed", c.seed}};
  if (c.theorem) {
    j["theorem"] = std::string(theorem_name(*c.theorem));
    j["n"] = c.n;
    j["k"] = c.k;
    j["m"] = c.m;
    j["q"] = c.q;
    j["r0"] = c.r0;
  } else if (c.command == "verify") {
    j["theorem"] = "default-suite";
  }
  if (c.command == "verify") {
    j["samples"] = c.samples;
    j["integrand"] = c.make_integrand().name();
    j["threshold"] = c.threshold;
  }
  return j;
}

void write_json(const json& doc, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << doc.dump(2) << '\n';
  if (!f) throw std::runtime_error("failed writing " + path);
}

TheoremConfig checked_config(const RunConfig& c) {
  try {
    TheoremConfig tc = c.theorem_config();
    tc.validate();
    return tc;
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
}

void add_common(CLI::App* sub, RunConfig& c, std::string& theorem, bool with_theorem) {
  if (with_theorem) sub->add_option("--theorem", theorem, "formula, e.g. circumscribed, pivoted-circle");
  sub->add_option("--n", c.n, "ambient dimension");
  sub->add_option("--k", c.k, "sphere / subspace dimension");
  sub->add_option("--m", c.m, "pivot or anchor dimension");
  sub->add_option("--q", c.q, "dimension of the fixed circle's plane");
  sub->add_option("--r0", c.r0, "radius of the fixed circle");
  sub->add_option("--out", c.out, "JSON report path");
  sub->add_option("--threads", c.threads, "worker threads (0 = all cores)");
}

int run_verify(const RunConfig& c, std::ostream& out) {
  std::vector<CaseSpec> cases;
  if (c.theorem) {
    cases.push_back(CaseSpec{c.theorem_config(), c.make_integrand(), c.samples, std::nullopt});
  } else {
    cases = default_suite(c.samples);
  }
  SuiteOptions opt;
  opt.seed = c.seed;
  opt.threshold = c.threshold;
  opt.threads = c.threads;
  const auto verdicts = run_suite(cases, opt);

  int failed = 0;
  for (const auto& v : verdicts) {
    if (!v.pass) ++failed;
    out << (v.pass ? "PASS " : "FAIL ") << v.config << " [" << v.integrand << "]";
    if (v.reason.empty() || v.pass) {
      out << std::setprecision(6) << " lhs=" << v.lhs.mean;
      if (!v.lhs.exact) out << "+-" << v.lhs.std_error;
      out << " rhs=" << v.rhs.mean << "+-" << v.rhs.std_error << " z=" << std::setprecision(3) << v.z_score;
    }
    if (!v.reason.empty()) out << " (" << v.reason << ")";
    out << '\n';
  }
  out << verdicts.size() - failed << " passed, " << failed << " failed\n";
  if (!c.out.empty()) emit_report(verdicts, c, c.out);
  return failed == 0 ? 0 : 1;
}

int run_oracle(const RunConfig& c, std::ostream& out) {
  const TheoremConfig tc = c.theorem_config();
  const double tol = c.tolerance > 0.0 ? c.tolerance : 1e-5;
  Rng rng(RandomStream{c.seed, 0});
  double worst = 0.0;
  for (int i = 0; i < c.count; ++i) {
    const SphereParam param = draw_oracle_param(tc, rng);
    const double closed = density(tc, param);
    const double fd = fd_jacobian_density(tc, param, c.step);
    worst = std::max(worst, std::abs(fd - closed) / closed);
  }
  const bool pass = worst <= tol;
  out << (pass ? "PASS " : "FAIL ") << tc.describe() << " finite-difference Jacobian: max relative error "
      << std::setprecision(3) << worst << " over " << c.count << " points (tolerance " << tol << ")\n";
  if (!c.out.empty()) {
    json doc{{"version", kReportVersion},
             {"config", config_json(c)},
             {"oracle", {{"points", c.count}, {"step", c.step}, {"max_relative_error", worst}, {"tolerance", tol},
                         {"pass", pass}}}};
    write_json(doc, c.out);
  }
  return pass ? 0 : 1;
}

int run_roundtrip(const RunConfig& c, std::ostream& out) {
  const TheoremConfig tc = c.theorem_config();
  const double tol = c.tolerance > 0.0 ? c.tolerance : 1e-9;
  Rng rng(RandomStream{c.seed, 0});
  double worst = 0.0;
  for (int i = 0; i < c.count; ++i) worst = std::max(worst, roundtrip_error(tc, draw_tuple(tc, rng)));
  const bool pass = worst <= tol;
  out << (pass ? "PASS " : "FAIL ") << tc.describe() << " round trip: max error " << std::setprecision(3) << worst
      << " over " << c.count << " tuples (tolerance " << tol << ")\n";
  if (!c.out.empty()) {
    json doc{{"version", kReportVersion},
             {"config", config_json(c)},
             {"roundtrip", {{"tuples", c.count}, {"max_error", worst}, {"tolerance", tol}, {"pass", pass}}}};
    write_json(doc, c.out);
  }
  return pass ? 0 : 1;
}

int run_constants(const RunConfig& c, std::ostream& out) {
  json sigma = json::array();
  json grass = json::array();
  out << std::setprecision(15);
  for (int d = 1; d <= c.n; ++d) {
    out << "sigma_" << d << " = " << sphere_surface_area(d) << '\n';
    sigma.push_back(sphere_surface_area(d));
  }
  for (int k = 0; k <= c.n; ++k) {
    out << "|G(" << k << "," << c.n << ")| = " << grassmannian_measure(k, c.n) << '\n';
    grass.push_back(grassmannian_measure(k, c.n));
  }
  if (!c.out.empty()) {
    write_json(json{{"version", kReportVersion}, {"config", config_json(c)}, {"sigma", sigma}, {"grassmannian", grass}},
               c.out);
  }
  return 0;
}

int run_sample(const RunConfig& c, std::ostream& out) {
  const TheoremConfig tc = c.theorem_config();
  const Integrand f = c.make_integrand();
  Rng rng(RandomStream{c.seed, 0});
  json lines = json::array();
  for (int i = 0; i < c.count; ++i) {
    const WeightedParam wp = sample_param(tc, f.default_proposal(), rng);
    const PointTuple x = reconstruct(wp.param);
    json pts = json::array();
    for (const auto& xi : x) pts.push_back(std::vector<double>(xi.data(), xi.data() + xi.size()));
    json line{{"weight", number(wp.weight)}, {"density", number(density(tc, wp.param))}, {"x", pts}};
    out << line.dump() << '\n';
    lines.push_back(std::move(line));
  }
  if (!c.out.empty()) write_json(json{{"version", kReportVersion}, {"config", config_json(c)}, {"samples", lines}}, c.out);
  return 0;
}

}  // namespace

TheoremConfig RunConfig::theorem_config() const {
  if (!theorem) throw UsageError(command + ": --theorem is required");
  return TheoremConfig::make(*theorem, n, k, m, q, r0);
}

Integrand RunConfig::make_integrand() const {
  Integrand f;
  f.kind = parse_integrand(integrand);
  f.radius = radius;
  f.exponent = exponent;
  f.cutoff = cutoff;
  return f;
}

RunConfig parse_args(int argc, const char* const* argv, std::optional<std::string> env_seed) {
  RunConfig c;
  std::string theorem;
  std::string samples = "1000000";
  std::string seed;

  CLI::App app{"Monte Carlo and finite-difference checks of spherical Blaschke-Petkantschin formulas", "bpsphere"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "compare both sides of a formula (default suite without --theorem)");
  add_common(verify, c, theorem, true);
  verify->add_option("--samples", samples, "Monte Carlo samples per side");
  verify->add_option("--seed", seed, "random seed (overrides BP_SEED)");
  verify->add_option("--integrand", c.integrand, "gaussian, ball, volume-power or constant");
  verify->add_option("--radius", c.radius, "ball radius");
  verify->add_option("--exponent", c.exponent, "volume power");
  verify->add_option("--cutoff", c.cutoff, "volume-power support radius");
  verify->add_option("--threshold", c.threshold, "pass threshold on |z|");

  auto* oracle = app.add_subcommand("oracle", "finite-difference Jacobian against the closed-form density");
  add_common(oracle, c, theorem, true);
  oracle->add_option("--seed", seed, "random seed (overrides BP_SEED)");
  oracle->add_option("--count", c.count, "parameter points");
  oracle->add_option("--step", c.step, "difference step");
  oracle->add_option("--tolerance", c.tolerance, "max relative error");

  auto* roundtrip = app.add_subcommand("roundtrip", "reconstruct(decompose(x)) against x");
  add_common(roundtrip, c, theorem, true);
  roundtrip->add_option("--seed", seed, "random seed (overrides BP_SEED)");
  roundtrip->add_option("--count", c.count, "random tuples");
  roundtrip->add_option("--tolerance", c.tolerance, "max coordinate error");

  auto* constants = app.add_subcommand("constants", "sphere areas and Grassmannian masses");
  constants->add_option("--n", c.n, "ambient dimension");
  constants->add_option("--out", c.out, "JSON report path");

  auto* sample = app.add_subcommand("sample", "draw parameter points with weights and densities");
  add_common(sample, c, theorem, true);
  sample->add_option("--seed", seed, "random seed (overrides BP_SEED)");
  sample->add_option("--count", c.count, "points");
  sample->add_option("--integrand", c.integrand, "integrand whose proposal is used");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  for (auto* sub : {verify, oracle, roundtrip, constants, sample})
    if (sub->parsed()) c.command = sub->get_name();

  if (!seed.empty()) {
    c.seed = parse_count(seed, "--seed");
  } else if (env_seed && !env_seed->empty()) {
    c.seed = parse_count(*env_seed, "BP_SEED");
  }
  c.samples = parse_count(samples, "--samples");
  if (!theorem.empty()) {
    try {
      c.theorem = parse_theorem(theorem);
    } catch (const InvalidInput& e) {
      throw UsageError(e.what());
    }
  }

  if (c.command == "constants") {
    if (c.n < 1) throw UsageError("constants: --n must be >= 1");
    return c;
  }
  if (c.count < 1) throw UsageError("--count must be >= 1");
  if (c.command != "verify" && !c.theorem) throw UsageError(c.command + ": --theorem is required");
  try {
    parse_integrand(c.integrand);
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  if (c.theorem) {
    const TheoremConfig tc = checked_config(c);
    if (c.command == "verify") {
      try {
        c.make_integrand().validate_for(tc);
      } catch (const InvalidInput& e) {
        throw UsageError(e.what());
      }
    }
    if (c.command == "oracle" && !is_chart_free(tc))
      throw UsageError("oracle: " + tc.describe() + " has a Grassmannian factor; no finite-difference chart");
    if (c.command == "roundtrip" && tc.theorem == TheoremId::kOnSphereSymmetric)
      throw UsageError("roundtrip: on-sphere-symmetric has no pointwise decomposition");
  }
  if (c.command == "verify") {
    if (c.samples < 2) throw UsageError("--samples must be >= 2");
    if (!(c.threshold > 0.0)) throw UsageError("--threshold must be positive");
  }
  if (c.command == "oracle" && !(c.step > 0.0)) throw UsageError("--step must be positive");
  return c;
}

json report_json(const std::vector<ComparisonVerdict>& verdicts, const RunConfig& config) {
  json cases = json::array();
  int passed = 0;
  for (const auto& v : verdicts) {
    if (v.pass) ++passed;
    json item{{"theorem", v.theorem},          {"config", v.config},       {"integrand", v.integrand},
              {"lhs", report_json_of(v.lhs)},  {"rhs", report_json_of(v.rhs)}, {"z_score", number(v.z_score)},
              {"threshold", v.threshold},      {"pass", v.pass},           {"wall_time", v.wall_time}};
    if (!v.reason.empty()) item["reason"] = v.reason;
    cases.push_back(std::move(item));
  }
  const int failed = static_cast<int>(verdicts.size()) - passed;
  return json{{"version", kReportVersion},
              {"config", config_json(config)},
              {"cases", std::move(cases)},
              {"summary", {{"passed", passed}, {"failed", failed}}}};
}

void emit_report(const std::vector<ComparisonVerdict>& verdicts, const RunConfig& config, const std::string& path) {
  write_json(report_json(verdicts, config), path);
}

json strip_timing(json report) {
  if (report.is_object()) {
    report.erase("wall_time");
    for (auto& [key, value] : report.items()) value = strip_timing(value);
  } else if (report.is_array()) {
    for (auto& value : report) value = strip_timing(value);
  }
  return report;
}

int run(const RunConfig& config, std::ostream& out) {
  if (config.command == "verify") return run_verify(config, out);
  if (config.command == "oracle") return run_oracle(config, out);
  if (config.command == "roundtrip") return run_roundtrip(config, out);
  if (config.command == "constants") return run_constants(config, out);
  if (config.command == "sample") return run_sample(config, out);
  throw UsageError("unknown command " + config.command);
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    const char* env = std::getenv("BP_SEED");
    config = parse_args(argc, argv, env ? std::optional<std::string>(env) : std::nullopt);
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  try {
    return run(config, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace bpsphere::cli

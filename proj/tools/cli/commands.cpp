#include "cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "cli/format.hpp"
#include "cli/instance.hpp"
#include "goint/errors.hpp"
#include "goint/sampling.hpp"
#include "goint/verify.hpp"

namespace goint::cli {

namespace {

constexpr std::size_t kDefaultTrials = 1000;
constexpr std::uint64_t kDefaultSeed = 0;

std::string format_of(const Options& opt, const char* fallback) {
  const std::string f = opt.format.value_or(fallback);
  if (f != "json" && f != "csv") throw ConfigurationError("unknown format '" + f + "' (json or csv)");
  return f;
}

void require_json(const Options& opt) {
  if (format_of(opt, "json") != "json") throw ConfigurationError("this command only emits json");
}

// --grid, then GOINT_DEFAULT_GRID, then the library default.
int kernel_resolution(const Options& opt) {
  if (opt.grid) {
    if (*opt.grid < 1) throw ConfigurationError("--grid must be positive");
    return *opt.grid;
  }
  if (const char* env = std::getenv("GOINT_DEFAULT_GRID"); env && *env) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (*end != '\0' || n < 1 || n > 1'000'000'000) {
      throw ConfigurationError(std::string("GOINT_DEFAULT_GRID must be a positive integer, got '") + env + "'");
    }
    return static_cast<int>(n);
  }
  return kDefaultKernelResolution;
}

IntegralConfig configured(const Json& spec, const Options& opt) {
  IntegralConfig c = parse_integral_spec(spec);
  c.set_kernel_resolution(kernel_resolution(opt));
  return c;
}

bool uses_kernel(const IntegralConfig& c) {
  return c.gpg() && c.gpg()->variant() == GpgFunctional::Variant::Kernel;
}

std::vector<Json> default_comparison() {
  return {Json{{"kind", "sugeno"}}, Json{{"kind", "choquet"}},
          Json{{"kind", "t_normed"}, {"star", {{"name", "product"}}}},
          Json{{"kind", "go"}, {"overlap", {{"name", "min"}}}, {"gpg", {{"name", "max"}}}}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

Json& sweep_target(Json& integral, const std::string& parameter) {
  const auto object_at = [](Json& parent, const char* key) -> Json& {
    if (!parent.contains(key) || !parent[key].is_object()) {
      throw ConfigurationError(std::string("sweep needs integral.") + key + " as an object");
    }
    return parent[key];
  };
  if (parameter == "overlap.p") {
    return object_at(integral, integral.value("kind", "") == "t_normed" ? "star" : "overlap");
  }
  Json& g = object_at(integral, "gpg");
  if (parameter == "gpg.p") return object_at(g, "distortion");
  return object_at(g, "kernel");
}

PropertyReport run_usc(const IntegralConfig& config, std::size_t trials, std::uint64_t seed) {
  const BinaryOperator overlap = config.op().value_or(BinaryOperator::min());
  PropertyReport report{"usc", overlap.describe(), trials, seed, {}, {}, std::nullopt};
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::stream(seed, trial);
    const FiniteSpace space = FiniteSpace::indexed(kDefaultSpaceSizes[trial % kDefaultSpaceSizes.size()]);
    const LevelProfile m = build_level_profile(random_capacity(space, rng), random_function(space, rng), overlap);
    for (PropertyViolation v : check_profile_usc(m).violations) {
      v.trial = trial;
      report.violations.push_back(std::move(v));
    }
  }
  return report;
}

PropertyReport run_suite(const std::string& suite, const Instance& inst, const Options& opt) {
  const IntegralConfig config = configured(inst.integral, opt);
  const std::size_t trials = opt.trials.value_or(inst.verification.trials.value_or(kDefaultTrials));
  const std::uint64_t seed = opt.seed.value_or(inst.verification.seed.value_or(kDefaultSeed));
  if (suite == "theorem1") return run_boundary_monotonicity_suite(config, kDefaultSpaceSizes, trials, seed);
  if (suite == "comonotone") return check_comonotone_maxitivity(config, trials, seed);
  if (suite == "homogeneity") {
    HomogeneityOptions options;
    options.star = inst.verification.star;
    options.exploratory = options.star.has_value() && config.kind() == IntegralConfig::Kind::GO;
    return check_star_homogeneity(config, trials, seed, options);
  }
  if (suite == "problem1") {
    if (config.kind() != IntegralConfig::Kind::GO) throw ConfigurationError("problem1 needs a go integral");
    return search_maxitivity_homogeneity(*config.op(), *config.gpg(), inst.verification.star.value_or(BinaryOperator::min()),
                           trials, seed);
  }
  if (suite == "usc") return run_usc(config, trials, seed);
  throw ConfigurationError("unknown suite '" + suite + "' (theorem1, comonotone, homogeneity, problem1, usc)");
}

}  // namespace

CommandResult cmd_integrate(const Options& opt) {
  const std::string fmt = format_of(opt, "json");
  const Instance inst = load_instance(opt.input);
  const FuzzyFunction& f = require_function(inst);
  const IntegralConfig config = configured(inst.integral, opt);
  const double value = config(inst.capacity, f);
  if (fmt == "csv") {
    return {kOk, "integral,operators,value\n" + config.kind_name() + "," + csv_field(config.operators()) + "," +
                     csv_num(value) + "\n"};
  }
  const LevelProfile m = build_level_profile(inst.capacity, f, config.op().value_or(BinaryOperator::min()));
  Json out{{"value", num(value)},
           {"kind", config.kind_name()},
           {"profile", to_json(m)},
           {"grid_resolution", uses_kernel(config) ? Json(config.kernel_resolution()) : Json(nullptr)}};
  return {kOk, dump(out)};
}

CommandResult cmd_compare(const Options& opt) {
  const std::string fmt = format_of(opt, "csv");
  const Instance inst = load_instance(opt.input);
  const FuzzyFunction& f = require_function(inst);
  const std::vector<Json> specs = inst.compare.value_or(default_comparison());
  std::ostringstream csv;
  csv << "integral,operators,value\n";
  Json rows = Json::array();
  for (const Json& spec : specs) {
    const IntegralConfig config = configured(spec, opt);
    const double value = config(inst.capacity, f);
    csv << config.kind_name() << ',' << csv_field(config.operators()) << ',' << csv_num(value) << '\n';
    rows.push_back({{"integral", config.kind_name()}, {"operators", config.operators()}, {"value", num(value)}});
  }
  return {kOk, fmt == "csv" ? csv.str() : dump(rows)};
}

CommandResult cmd_axioms(const Options& opt) {
  require_json(opt);
  const int picked = opt.t_overlap.has_value() + opt.t_norm.has_value() + opt.gpg.has_value();
  if (picked != 1) throw ConfigurationError("give exactly one of --t-overlap, --t-norm, --gpg");
  const int grid = opt.grid.value_or(kDefaultAxiomGrid);
  AxiomReport report;
  if (opt.t_overlap) {
    report = check_t_overlap(parse_operator(*opt.t_overlap), grid);
  } else if (opt.t_norm) {
    report = check_t_norm(parse_operator(*opt.t_norm), grid);
  } else {
    report = check_gpg_discrete(DiscreteGpg::parse(*opt.gpg), opt.arity, grid, opt.seed.value_or(1));
  }
  return {report.passed() ? kOk : kViolation, dump(to_json(report))};
}

CommandResult cmd_properties(const Options& opt) {
  require_json(opt);
  const Instance inst = load_instance(opt.input);
  std::vector<std::string> suites = opt.suites.empty() ? inst.verification.suites : opt.suites;
  if (suites.empty()) throw ConfigurationError("no suite given (--suite or verification.suites)");
  int code = kOk;
  Json reports = Json::array();
  for (const std::string& suite : suites) {
    const PropertyReport r = run_suite(suite, inst, opt);
    // problem1 is exploratory: a witness is a finding, not a failure.
    if (suite != "problem1" && !r.passed()) code = kViolation;
    reports.push_back(to_json(r));
  }
  return {code, dump(reports.size() == 1 ? reports[0] : Json{{"reports", reports}})};
}

CommandResult cmd_sweep(const Options& opt) {
  const std::string fmt = format_of(opt, "csv");
  const Instance inst = load_instance(opt.input);
  const FuzzyFunction& f = require_function(inst);
  if (!inst.sweep) throw ConfigurationError("instance has no sweep spec");
  const SweepSpec& s = *inst.sweep;
  const double lo = std::min(s.from, s.to);
  const double hi = std::max(s.from, s.to);
  const std::string key = s.parameter.substr(s.parameter.find('.') + 1);

  std::ostringstream csv;
  csv << "param,value\n";
  Json rows = Json::array();
  for (int i = 0; i < s.steps; ++i) {
    const double param = s.steps == 1 ? lo : lo + i * (hi - lo) / (s.steps - 1);
    Json spec = inst.integral;
    sweep_target(spec, s.parameter)[key] = param;
    const double value = configured(spec, opt)(inst.capacity, f);
    csv << csv_num(param) << ',' << csv_num(value) << '\n';
    rows.push_back({{"param", num(param)}, {"value", num(value)}});
  }
  return {kOk, fmt == "csv" ? csv.str() : dump(rows)};
}

}  // namespace goint::cli

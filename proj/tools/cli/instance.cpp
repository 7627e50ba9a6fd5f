#include "cli/instance.hpp"

#include <fstream>
#include <map>
#include <set>

#include "goint/errors.hpp"

namespace goint::cli {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw CliError(kIo, "malformed instance: " + what); }

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) malformed(where + " must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) malformed("missing '" + std::string(key) + "' in " + where);
  return *it;
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) malformed(where + " must be a number");
  return j.get<double>();
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) malformed(where + " must be a string");
  return j.get<std::string>();
}

// One value per point, keyed by label or listed in point order.
std::vector<double> point_values(const FiniteSpace& space, const Json& j, const std::string& where) {
  std::vector<double> out(space.size());
  if (j.is_array()) {
    if (j.size() != space.size()) {
      throw ConfigurationError(where + " lists " + std::to_string(j.size()) + " values for " +
                               std::to_string(space.size()) + " points");
    }
    for (std::size_t i = 0; i < j.size(); ++i) out[i] = number(j[i], where + "[" + std::to_string(i) + "]");
    return out;
  }
  if (!j.is_object()) malformed(where + " must be an object keyed by point label");
  std::vector<bool> seen(space.size(), false);
  for (const auto& [label, value] : j.items()) {
    const auto idx = space.index_of(label);
    if (!idx) throw ConfigurationError(where + " names unknown point '" + label + "'");
    out[*idx] = number(value, where + "." + label);
    seen[*idx] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw ConfigurationError(where + " has no value for point '" + space.label(i) + "'");
  }
  return out;
}

Distortion parse_distortion(const Json& j) {
  const std::string name = text(field(j, "name", "distortion"), "distortion.name");
  if (name == "power") return Distortion::power(number(field(j, "p", "distortion"), "distortion.p"));
  if (name == "piecewise" || name == "piecewise_linear") {
    const Json& knots = field(j, "knots", "distortion");
    if (!knots.is_array()) malformed("distortion.knots must be an array of [x, y] pairs");
    std::vector<std::pair<double, double>> k;
    for (const auto& pt : knots) {
      if (!pt.is_array() || pt.size() != 2) malformed("distortion.knots must be an array of [x, y] pairs");
      k.emplace_back(number(pt[0], "knot x"), number(pt[1], "knot y"));
    }
    return Distortion::piecewise_linear(std::move(k));
  }
  throw ConfigurationError("unknown distortion '" + name + "'");
}

Capacity parse_capacity(const FiniteSpace& space, const Json& j) {
  const std::string kind = text(field(j, "kind", "capacity"), "capacity.kind");
  if (kind == "table") {
    const Json& values = field(j, "values", "capacity");
    if (!values.is_array()) malformed("capacity.values must be an array");
    TableSpec spec;
    for (const auto& entry : values) {
      const Json& labels = field(entry, "subset", "capacity.values entry");
      if (!labels.is_array()) malformed("subset must be an array of point labels");
      std::vector<std::string> names;
      for (const auto& l : labels) names.push_back(text(l, "subset label"));
      const Subset s = space.subset(names);
      if (!spec.values.emplace(s, number(field(entry, "value", "capacity.values entry"), "value")).second) {
        throw ConfigurationError("capacity table lists " + space.describe(s) + " twice");
      }
    }
    return build_capacity(space, spec);
  }
  if (kind == "possibility") {
    return build_capacity(space, PossibilitySpec{point_values(space, field(j, "densities", "capacity"), "densities")});
  }
  if (kind == "additive") {
    return build_capacity(space, AdditiveSpec{point_values(space, field(j, "weights", "capacity"), "weights")});
  }
  if (kind == "sugeno_lambda") {
    SugenoLambdaSpec spec{point_values(space, field(j, "densities", "capacity"), "densities"), std::nullopt};
    if (auto it = j.find("lambda"); it != j.end() && !(it->is_string() && *it == "auto")) {
      spec.lambda = number(*it, "capacity.lambda");
    }
    return build_capacity(space, spec);
  }
  if (kind == "distorted") {
    return build_capacity(space, DistortedSpec{point_values(space, field(j, "weights", "capacity"), "weights"),
                                               parse_distortion(field(j, "distortion", "capacity"))});
  }
  throw ConfigurationError("unknown capacity kind '" + kind + "'");
}

SweepSpec parse_sweep(const Json& j) {
  SweepSpec s;
  s.parameter = text(field(j, "parameter", "sweep"), "sweep.parameter");
  s.from = number(field(j, "from", "sweep"), "sweep.from");
  s.to = number(field(j, "to", "sweep"), "sweep.to");
  const Json& steps = field(j, "steps", "sweep");
  if (!steps.is_number_integer()) malformed("sweep.steps must be an integer");
  s.steps = steps.get<int>();
  if (s.steps < 1) throw ConfigurationError("sweep.steps must be at least 1");
  static const std::set<std::string> known{"overlap.p", "gpg.p", "gpg.beta"};
  if (!known.contains(s.parameter)) throw ConfigurationError("unknown sweep parameter '" + s.parameter + "'");
  return s;
}

VerificationSpec parse_verification(const Json& j) {
  VerificationSpec v;
  if (auto it = j.find("suites"); it != j.end()) {
    if (!it->is_array()) malformed("verification.suites must be an array");
    for (const auto& s : *it) v.suites.push_back(text(s, "suite name"));
  }
  if (auto it = j.find("trials"); it != j.end()) {
    if (!it->is_number_unsigned()) malformed("verification.trials must be a nonnegative integer");
    v.trials = it->get<std::size_t>();
  }
  if (auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_unsigned()) malformed("verification.seed must be a nonnegative integer");
    v.seed = it->get<std::uint64_t>();
  }
  if (auto it = j.find("star"); it != j.end()) v.star = parse_operator_spec(*it);
  return v;
}

}  // namespace

BinaryOperator parse_operator_spec(const Json& spec) {
  if (spec.is_string()) return parse_operator(spec.get<std::string>());
  const std::string name = text(field(spec, "name", "operator"), "operator.name");
  std::optional<double> p;
  if (auto it = spec.find("p"); it != spec.end()) p = number(*it, "operator.p");
  return make_operator(name, p);
}

GpgFunctional parse_gpg_spec(const Json& spec) {
  const std::string name = text(field(spec, "name", "gpg"), "gpg.name");
  if (name == "max") return GpgFunctional::max();
  if (name == "distorted") return GpgFunctional::distorted(parse_distortion(field(spec, "distortion", "gpg")));
  if (name == "kernel") {
    const Json& k = field(spec, "kernel", "gpg");
    const std::string kname = text(field(k, "name", "kernel"), "kernel.name");
    if (kname == "tilt") return GpgFunctional::kernel(Kernel::tilt(number(field(k, "beta", "kernel"), "kernel.beta")));
    if (kname == "distortion") {
      return GpgFunctional::kernel(Kernel::from_distortion(parse_distortion(field(k, "distortion", "kernel"))));
    }
    throw ConfigurationError("unknown kernel '" + kname + "'");
  }
  throw ConfigurationError("unknown gpg functional '" + name + "'");
}

IntegralConfig parse_integral_spec(const Json& spec) {
  try {
    const std::string kind = text(field(spec, "kind", "integral"), "integral.kind");
    if (kind == "sugeno") return IntegralConfig::sugeno();
    if (kind == "choquet") return IntegralConfig::choquet();
    if (kind == "t_normed") return IntegralConfig::t_normed(parse_operator_spec(field(spec, "star", "integral")));
    if (kind == "go") {
      return IntegralConfig::go(parse_operator_spec(field(spec, "overlap", "integral")),
                                parse_gpg_spec(field(spec, "gpg", "integral")));
    }
    throw ConfigurationError("unknown integral kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CliError(kIo, "cannot read '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw CliError(kIo, "malformed JSON in '" + path.string() + "': " + e.what());
  }
}

Instance parse_instance(const Json& doc) {
  try {
    const Json& points = field(field(doc, "space", "instance"), "points", "space");
    if (!points.is_array()) malformed("space.points must be an array of labels");
    std::vector<std::string> labels;
    for (const auto& p : points) labels.push_back(text(p, "point label"));
    FiniteSpace space(labels);

    Capacity capacity = parse_capacity(space, field(doc, "capacity", "instance"));
    std::optional<FuzzyFunction> function;
    if (auto it = doc.find("function"); it != doc.end()) {
      function = FuzzyFunction(space, point_values(space, *it, "function"));
    }
    Json integral = doc.contains("integral") ? doc["integral"] : Json{{"kind", "sugeno"}};
    parse_integral_spec(integral);  // validate before any computation

    std::optional<std::vector<Json>> compare;
    if (auto it = doc.find("compare"); it != doc.end()) {
      if (!it->is_array()) malformed("compare must be an array of integral specs");
      compare.emplace();
      for (const auto& c : *it) {
        parse_integral_spec(c);
        compare->push_back(c);
      }
    }
    std::optional<SweepSpec> sweep;
    if (auto it = doc.find("sweep"); it != doc.end()) sweep = parse_sweep(*it);
    VerificationSpec verification;
    if (auto it = doc.find("verification"); it != doc.end()) verification = parse_verification(*it);

    return Instance{std::move(space), std::move(capacity), std::move(function), std::move(integral),
                    std::move(compare), std::move(sweep), std::move(verification)};
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
}

Instance load_instance(const std::filesystem::path& path) { return parse_instance(read_json(path)); }

const FuzzyFunction& require_function(const Instance& inst) {
  if (!inst.function) throw ConfigurationError("instance has no function values");
  return *inst.function;
}

}  // namespace goint::cli

#include "cli/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace goint::cli {

std::string csv_num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) { return std::strtod(csv_num(x).c_str(), nullptr); }

Json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round12(x);
}

namespace {

Json numbers(const auto& xs) {
  Json a = Json::array();
  for (double x : xs) a.push_back(num(x));
  return a;
}

Json capacity_json(const Capacity& nu) {
  Json c{{"kind", to_string(nu.kind())}};
  // Small spaces carry the full table so the witness can be replayed by hand.
  if (nu.space().size() <= 10) c["table"] = numbers(expand_to_table(nu));
  return c;
}

}  // namespace

Json to_json(const LevelProfile& m) {
  Json a = Json::array();
  for (const Segment& s : m.segments()) a.push_back(Json::array({num(s.breakpoint), num(s.capacity)}));
  return a;
}

Json to_json(const AxiomReport& r) {
  Json cx = Json::array();
  for (const Counterexample& c : r.counterexamples) {
    cx.push_back({{"axiom", c.axiom},
                  {"inputs", numbers(c.inputs)},
                  {"observed", numbers(c.observed)},
                  {"severity", num(c.severity)}});
  }
  return {{"axiom_set", r.axiom_set}, {"subject", r.subject},        {"grid", r.grid},
          {"passed", r.passed()},     {"counterexamples", cx},       {"notes", r.notes}};
}

Json to_json(const PropertyReport& r) {
  Json vs = Json::array();
  for (std::size_t i = 0; i < r.violations.size() && i < kMaxListedViolations; ++i) {
    const PropertyViolation& v = r.violations[i];
    Json j{{"property", v.property}, {"trial", v.trial}};
    if (v.capacity) j["capacity"] = capacity_json(*v.capacity);
    if (!v.functions.empty()) {
      Json fs = Json::array();
      for (const auto& f : v.functions) fs.push_back(numbers(f.values()));
      j["functions"] = fs;
    }
    if (v.scalar) j["scalar"] = num(*v.scalar);
    if (v.index) j["index"] = *v.index;
    j["left"] = num(v.left);
    j["right"] = num(v.right);
    j["gap"] = num(v.gap);
    vs.push_back(std::move(j));
  }
  Json out{{"property", r.property}, {"subject", r.subject}, {"trials", r.trials},
           {"seed", r.seed},         {"passed", r.passed()}};
  if (r.outcome) out["outcome"] = *r.outcome;
  out["violation_count"] = r.violations.size();
  out["violations"] = vs;
  out["notes"] = r.notes;
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace goint::cli

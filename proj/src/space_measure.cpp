#include "goint/space_measure.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "goint/errors.hpp"

namespace goint {

namespace detail {

struct CapacityFactory {
  static Capacity make(CapacityKind kind, FiniteSpace space) { return Capacity(kind, std::move(space)); }
  static std::vector<double>& table(Capacity& c) { return c.table_; }
  static std::vector<double>& point_data(Capacity& c) { return c.point_data_; }
  static double& lambda(Capacity& c) { return c.lambda_; }
  static std::optional<Distortion>& distortion(Capacity& c) { return c.distortion_; }
};

}  // namespace detail

namespace {

using detail::CapacityFactory;

constexpr double kNormalizationTolerance = 1e-9;
constexpr std::size_t kMaxRecordedViolations = 64;
constexpr std::size_t kSampledInsertions = 100000;
constexpr std::uint64_t kValidationSeed = 0x5eed'cafe'0001ull;

void require_point_count(const FiniteSpace& space, std::size_t count, const char* what) {
  if (count != space.size()) {
    std::ostringstream os;
    os << "expected " << space.size() << ' ' << what << ", got " << count;
    throw ConstructionError("shape", os.str());
  }
}

double masked_sum(std::span<const double> weights, Subset a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (a.contains(i)) sum += weights[i];
  }
  return sum;
}

double lambda_measure(std::span<const double> densities, double lambda, Subset a) {
  if (lambda == 0.0) return std::min(1.0, masked_sum(densities, a));
  double product = 1.0;
  for (std::size_t i = 0; i < densities.size(); ++i) {
    if (a.contains(i)) product *= 1.0 + lambda * densities[i];
  }
  return std::clamp((product - 1.0) / lambda, 0.0, 1.0);
}

double lambda_residual(std::span<const double> densities, double lambda) {
  double product = 1.0;
  for (double g : densities) product *= 1.0 + lambda * g;
  return product - (1.0 + lambda);
}

void record(ValidationReport& report, CapacityViolation violation) {
  ++report.violation_count;
  if (report.violations.size() < kMaxRecordedViolations) report.violations.push_back(std::move(violation));
}

void check_insertion(const Capacity& nu, Subset a, std::size_t i, ValidationReport& report) {
  const Subset b = a.with(i);
  const double lo = nu.value(a);
  const double hi = nu.value(b);
  ++report.checks;
  if (lo > hi + kMonotoneTolerance) {
    record(report, {"monotonicity", {a, b}, {lo, hi}});
  }
}

}  // namespace

// -- Subset / FiniteSpace ------------------------------------------------------

Subset Subset::of(std::initializer_list<std::size_t> indices) {
  Subset s;
  for (std::size_t i : indices) s = s.with(i);
  return s;
}

int Subset::count() const noexcept { return std::popcount(bits_); }

FiniteSpace::FiniteSpace(std::vector<std::string> labels) {
  if (labels.empty()) throw PreconditionError("space must contain at least one point");
  if (labels.size() > kMaxSpaceSize) {
    throw PreconditionError("space has " + std::to_string(labels.size()) + " points; at most 64 are supported");
  }
  std::set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) throw PreconditionError("duplicate point label '" + label + "'");
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

FiniteSpace FiniteSpace::indexed(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return FiniteSpace(std::move(labels));
}

std::optional<std::size_t> FiniteSpace::index_of(std::string_view label) const {
  const auto& l = *labels_;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] == label) return i;
  }
  return std::nullopt;
}

Subset FiniteSpace::subset(std::span<const std::string> labels) const {
  Subset s;
  for (const auto& label : labels) {
    auto i = index_of(label);
    if (!i) throw PreconditionError("unknown point label '" + label + "'");
    s = s.with(*i);
  }
  return s;
}

std::string FiniteSpace::describe(Subset a) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!a.contains(i)) continue;
    if (!first) out += ',';
    out += label(i);
    first = false;
  }
  return out + "}";
}

// -- FuzzyFunction -------------------------------------------------------------

FuzzyFunction::FuzzyFunction(FiniteSpace space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size()) {
    throw PreconditionError("function has " + std::to_string(values_.size()) + " values for a space of " +
                            std::to_string(space_.size()) + " points");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!(v >= 0.0 && v <= 1.0)) {
      std::ostringstream os;
      os << "function value at '" << space_.label(i) << "' is " << v << ", outside [0, 1]";
      throw PreconditionError(os.str());
    }
  }
}

FuzzyFunction FuzzyFunction::constant(const FiniteSpace& space, double c) {
  return FuzzyFunction(space, std::vector<double>(space.size(), c));
}

bool FuzzyFunction::dominated_by(const FuzzyFunction& g) const {
  if (!(space_ == g.space_)) throw PreconditionError("functions live on different spaces");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] > g.values_[i]) return false;
  }
  return true;
}

FuzzyFunction pointwise_max(const FuzzyFunction& f, const FuzzyFunction& g) {
  if (!(f.space() == g.space())) throw PreconditionError("functions live on different spaces");
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(f[i], g[i]);
  return FuzzyFunction(f.space(), std::move(out));
}

Subset level_set(const FuzzyFunction& f, double t) {
  Subset s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] >= t) s = s.with(i);
  }
  return s;
}

// -- Capacity ------------------------------------------------------------------

std::string_view to_string(CapacityKind kind) {
  switch (kind) {
    case CapacityKind::Table: return "table";
    case CapacityKind::Possibility: return "possibility";
    case CapacityKind::Additive: return "additive";
    case CapacityKind::SugenoLambda: return "sugeno_lambda";
    case CapacityKind::Distorted: return "distorted";
  }
  return "unknown";
}

Capacity Capacity::unchecked_table(FiniteSpace space, std::vector<double> values) {
  if (space.size() > kMaxTableSpaceSize) {
    throw ConstructionError("shape", "table capacities are limited to 20 points");
  }
  const std::size_t expected = std::size_t{1} << space.size();
  if (values.size() != expected) {
    throw IncompleteTableError("table has " + std::to_string(values.size()) + " entries; " +
                               std::to_string(expected) + " subsets required");
  }
  Capacity c(CapacityKind::Table, std::move(space));
  c.table_ = std::move(values);
  return c;
}

double Capacity::value(Subset a) const {
  if (kind_ == CapacityKind::Table) return table_[a.bits()];
  if (a.is_empty()) return 0.0;
  if (a == space_.full()) return 1.0;
  switch (kind_) {
    case CapacityKind::Possibility: {
      double best = 0.0;
      for (std::size_t i = 0; i < point_data_.size(); ++i) {
        if (a.contains(i)) best = std::max(best, point_data_[i]);
      }
      return best;
    }
    case CapacityKind::Additive:
      return std::min(1.0, masked_sum(point_data_, a));
    case CapacityKind::SugenoLambda:
      return lambda_measure(point_data_, lambda_, a);
    case CapacityKind::Distorted:
      return (*distortion_)(std::min(1.0, masked_sum(point_data_, a)));
    case CapacityKind::Table:
      break;
  }
  return 0.0;
}

double capacity_value(const Capacity& nu, Subset a) {
  if (!nu.space().contains(a)) throw PreconditionError("subset is not contained in the capacity's space");
  return nu.value(a);
}

std::vector<double> expand_to_table(const Capacity& nu) {
  const std::size_t n = nu.space().size();
  if (n > kMaxTableSpaceSize) throw PreconditionError("cannot tabulate a capacity on more than 20 points");
  std::vector<double> table(std::size_t{1} << n);
  for (std::uint64_t bits = 0; bits < table.size(); ++bits) table[bits] = nu.value(Subset(bits));
  return table;
}

ValidationReport validate_capacity(const Capacity& nu) {
  ValidationReport report;
  const FiniteSpace& space = nu.space();
  const std::size_t n = space.size();
  const Subset full = space.full();

  const double at_empty = nu.value(Subset::empty());
  const double at_full = nu.value(full);
  report.checks += 2;
  if (at_empty != 0.0) record(report, {"normalization", {Subset::empty()}, {at_empty}});
  if (at_full != 1.0) record(report, {"normalization", {full}, {at_full}});

  if (n <= kMaxTableSpaceSize) {
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < subsets; ++bits) {
      const Subset a(bits);
      const double v = nu.value(a);
      if (!(v >= 0.0 && v <= 1.0)) record(report, {"range", {a}, {v}});
      for (std::size_t i = 0; i < n; ++i) {
        if (!a.contains(i)) check_insertion(nu, a, i, report);
      }
    }
    return report;
  }

  report.sampled = true;
  std::mt19937_64 rng(kValidationSeed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t trial = 0; trial < kSampledInsertions; ++trial) {
    const Subset a = Subset(rng()) & full;
    const double v = nu.value(a);
    if (!(v >= 0.0 && v <= 1.0)) record(report, {"range", {a}, {v}});
    const std::size_t i = pick(rng);
    if (!a.contains(i)) check_insertion(nu, a, i, report);
  }
  return report;
}

// -- builders ------------------------------------------------------------------

double solve_sugeno_lambda(std::span<const double> densities) {
  for (double g : densities) {
    if (!(g > 0.0 && g < 1.0)) {
      throw ConstructionError("lambda", "automatic λ requires every density in (0, 1)");
    }
  }
  const double sum = std::accumulate(densities.begin(), densities.end(), 0.0);
  if (std::abs(sum - 1.0) <= 1e-12) return 0.0;

  double lo = 0.0;
  double hi = 0.0;
  if (sum < 1.0) {
    // Residual is negative just above 0 and eventually positive.
    hi = 1.0;
    while (lambda_residual(densities, hi) <= 0.0) {
      hi *= 2.0;
      if (hi > 1e15) throw ConstructionError("lambda", "no bracketed λ root in (0, inf)");
    }
  } else {
    // Residual is positive near -1 and negative just below 0.
    lo = -1.0;
    hi = 0.0;
    if (!(lambda_residual(densities, -1.0 + 1e-15) > 0.0)) {
      throw ConstructionError("lambda", "no bracketed λ root in (-1, 0)");
    }
  }
  const bool positive_branch = sum < 1.0;
  for (int iter = 0; iter < 400; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double r = lambda_residual(densities, mid);
    // On the positive branch the residual goes - then +; on the negative branch + then -.
    if ((r < 0.0) == positive_branch) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-10 * std::max(1.0, std::abs(mid))) break;
  }
  const double root = 0.5 * (lo + hi);
  if (root == 0.0) throw ConstructionError("lambda", "λ root collapsed to 0");
  return root;
}

Capacity build_capacity(const FiniteSpace& space, const CapacitySpec& spec) {
  return std::visit(
      [&](const auto& s) -> Capacity {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, TableSpec>) {
          if (space.size() > kMaxTableSpaceSize) {
            throw ConstructionError("shape", "table capacities are limited to 20 points");
          }
          const std::size_t total = std::size_t{1} << space.size();
          std::vector<double> values(total, std::nan(""));
          std::vector<bool> present(total, false);
          for (const auto& [subset, v] : s.values) {
            if (!space.contains(subset)) throw ConstructionError("shape", "table entry outside the space");
            values[subset.bits()] = v;
            present[subset.bits()] = true;
          }
          if (!present[0]) throw ConstructionError("normalization", "table has no entry for the empty set");
          if (!present[space.full().bits()]) {
            throw ConstructionError("normalization", "table has no entry for the whole space");
          }
          for (std::size_t bits = 0; bits < total; ++bits) {
            if (!present[bits]) {
              throw IncompleteTableError("incomplete capacity table: missing subset " +
                                         space.describe(Subset(bits)) + " (" +
                                         std::to_string(total - s.values.size()) + " missing in total)");
            }
          }
          Capacity c = Capacity::unchecked_table(space, std::move(values));
          ValidationReport report = validate_capacity(c);
          if (!report.passed()) {
            const CapacityViolation& v = report.violations.front();
            std::string witness;
            for (Subset w : v.witness) witness += (witness.empty() ? "" : " vs ") + space.describe(w);
            throw ConstructionError(v.axiom, "violated at " + witness);
          }
          return c;
        } else if constexpr (std::is_same_v<T, PossibilitySpec>) {
          require_point_count(space, s.densities.size(), "densities");
          for (double d : s.densities) {
            if (!(d >= 0.0 && d <= 1.0)) throw ConstructionError("range", "densities must lie in [0, 1]");
          }
          const double top = *std::max_element(s.densities.begin(), s.densities.end());
          if (std::abs(top - 1.0) > kNormalizationTolerance) {
            std::ostringstream os;
            os << "maximum density must equal 1 (got " << top << ")";
            throw ConstructionError("normalization", os.str());
          }
          Capacity c = CapacityFactory::make(CapacityKind::Possibility, space);
          CapacityFactory::point_data(c) = s.densities;
          return c;
        } else if constexpr (std::is_same_v<T, AdditiveSpec>) {
          require_point_count(space, s.weights.size(), "weights");
          for (double w : s.weights) {
            if (!(w >= 0.0 && w <= 1.0)) throw ConstructionError("range", "weights must lie in [0, 1]");
          }
          const double sum = std::accumulate(s.weights.begin(), s.weights.end(), 0.0);
          if (std::abs(sum - 1.0) > kNormalizationTolerance) {
            std::ostringstream os;
            os << "weights must sum to 1 (got " << sum << ")";
            throw ConstructionError("normalization", os.str());
          }
          Capacity c = CapacityFactory::make(CapacityKind::Additive, space);
          CapacityFactory::point_data(c) = s.weights;
          return c;
        } else if constexpr (std::is_same_v<T, SugenoLambdaSpec>) {
          require_point_count(space, s.densities.size(), "densities");
          double lambda = 0.0;
          if (s.lambda) {
            lambda = *s.lambda;
            if (!(lambda > -1.0) || !std::isfinite(lambda)) {
              throw ConstructionError("lambda", "λ must lie in (-1, inf)");
            }
            for (double g : s.densities) {
              if (!(g >= 0.0 && g <= 1.0)) throw ConstructionError("range", "densities must lie in [0, 1]");
            }
            const double total = lambda == 0.0
                                     ? std::accumulate(s.densities.begin(), s.densities.end(), 0.0)
                                     : lambda_residual(s.densities, lambda) / lambda + 1.0;
            if (std::abs(total - 1.0) > kNormalizationTolerance) {
              std::ostringstream os;
              os << "λ-measure of the whole space is " << total << ", not 1";
              throw ConstructionError("normalization", os.str());
            }
          } else {
            lambda = solve_sugeno_lambda(s.densities);
          }
          Capacity c = CapacityFactory::make(CapacityKind::SugenoLambda, space);
          CapacityFactory::point_data(c) = s.densities;
          CapacityFactory::lambda(c) = lambda;
          return c;
        } else {
          require_point_count(space, s.weights.size(), "weights");
          for (double w : s.weights) {
            if (!(w >= 0.0 && w <= 1.0)) throw ConstructionError("range", "weights must lie in [0, 1]");
          }
          const double sum = std::accumulate(s.weights.begin(), s.weights.end(), 0.0);
          if (std::abs(sum - 1.0) > kNormalizationTolerance) {
            std::ostringstream os;
            os << "base weights must sum to 1 (got " << sum << ")";
            throw ConstructionError("normalization", os.str());
          }
          if (std::string problem = s.distortion.validate(); !problem.empty()) {
            throw ConstructionError("distortion", problem);
          }
          Capacity c = CapacityFactory::make(CapacityKind::Distorted, space);
          CapacityFactory::point_data(c) = s.weights;
          CapacityFactory::distortion(c) = s.distortion;
          return c;
        }
      },
      spec);
}

}  // namespace goint

#include "goint/verify.hpp"

#include <algorithm>
#include <cmath>

#include "goint/errors.hpp"
#include "goint/sampling.hpp"

namespace goint {

namespace {

// Kernel values are grid approximations, so comparisons between two of them
// get the grid tolerance instead of the exact-path one.
double comparison_tolerance(const IntegralConfig& config) {
  const bool kernel = config.gpg() && config.gpg()->variant() == GpgFunctional::Variant::Kernel;
  return kernel ? kKernelTolerance : kIdentityTolerance;
}

void note_tolerance(const IntegralConfig& config, PropertyReport& report) {
  if (comparison_tolerance(config) == kKernelTolerance) {
    report.notes.push_back("kernel grid approximation: comparisons use tolerance 1e-3");
  }
}

constexpr CapacityKind kAllKinds[] = {CapacityKind::Table, CapacityKind::Possibility, CapacityKind::Additive,
                                      CapacityKind::SugenoLambda, CapacityKind::Distorted};

/// Stream index offset for per-size boundary capacities, disjoint from trial indices.
constexpr std::uint64_t kBoundaryStream = std::uint64_t{1} << 40;

FiniteSpace draw_space(const std::vector<std::size_t>& sizes, Rng& rng) {
  if (sizes.empty()) throw PreconditionError("at least one space size is required");
  return FiniteSpace::indexed(sizes[rng.index(0, sizes.size() - 1)]);
}

Capacity draw_capacity(const FiniteSpace& space, std::uint64_t slot, Rng& rng) {
  CapacityKind kind = kAllKinds[slot % 5];
  if (kind == CapacityKind::Table && space.size() > 10) kind = CapacityKind::Possibility;
  return random_capacity(space, kind, rng);
}

FuzzyFunction apply_star(const BinaryOperator& star, double c, const FuzzyFunction& f) {
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::clamp(star(c, f[i]), 0.0, 1.0);
  return FuzzyFunction(f.space(), std::move(v));
}

void check_boundaries(const IntegralConfig& config, const Capacity& nu, std::uint64_t trial, PropertyReport& report) {
  const FiniteSpace& space = nu.space();
  const double at_one = config(nu, FuzzyFunction::constant(space, 1.0));
  if (std::abs(at_one - 1.0) > kIdentityTolerance) {
    report.violations.push_back({"unit", nu, {}, std::nullopt, std::nullopt, at_one, 1.0, at_one - 1.0, trial});
  }
  const double at_zero = config(nu, FuzzyFunction::constant(space, 0.0));
  if (std::abs(at_zero) > kIdentityTolerance) {
    report.violations.push_back({"zero", nu, {}, std::nullopt, std::nullopt, at_zero, 0.0, at_zero, trial});
  }
}

BinaryOperator resolve_star(const IntegralConfig& config, const HomogeneityOptions& options) {
  switch (config.kind()) {
    case IntegralConfig::Kind::Sugeno:
    case IntegralConfig::Kind::TNormed:
      return options.star ? *options.star : *config.op();
    default:
      if (options.exploratory && options.star) return *options.star;
      throw PreconditionError("*-homogeneity needs a t-normed integral, or exploratory mode with an explicit *");
  }
}

}  // namespace

double brute_force_go(const Capacity& nu, const FuzzyFunction& f, const BinaryOperator& overlap,
                      const GpgFunctional& g, const GridSpec& grid) {
  if (!(grid.step > 0.0 && grid.step <= 0.5)) throw PreconditionError("grid step must lie in (0, 0.5]");
  if (!(nu.space() == f.space())) throw PreconditionError("capacity and function live on different spaces");
  if (g.variant() == GpgFunctional::Variant::Custom) {
    throw ConfigurationError("brute-force oracle has no sample semantics for custom functionals");
  }

  std::vector<double> ts;
  const auto steps = static_cast<std::size_t>(std::ceil(1.0 / grid.step));
  ts.reserve(steps + 1 + f.size());
  for (std::size_t j = 0; j <= steps; ++j) ts.push_back(std::min(1.0, static_cast<double>(j) * grid.step));
  if (grid.include_breakpoints) ts.insert(ts.end(), f.values().begin(), f.values().end());

  double best = 0.0;
  for (double t : ts) {
    const double m = overlap(capacity_value(nu, level_set(f, t)), t);
    const double sample = g.variant() == GpgFunctional::Variant::Kernel ? (*g.kernel())(t, m) : m;
    best = std::max(best, sample);
  }
  if (g.variant() == GpgFunctional::Variant::Distorted) return (*g.distortion())(best);
  return best;
}

PropertyReport run_boundary_monotonicity_suite(const IntegralConfig& config, const std::vector<std::size_t>& sizes,
                                  std::size_t trials, std::uint64_t seed) {
  PropertyReport report{"boundary-monotonicity", config.kind_name() + (config.operators().empty() ? "" : " " + config.operators()),
                        trials, seed, {}, {}, std::nullopt};
  note_tolerance(config, report);

  for (std::size_t s = 0; s < sizes.size(); ++s) {
    Rng rng = Rng::stream(seed, kBoundaryStream + s);
    const FiniteSpace space = FiniteSpace::indexed(sizes[s]);
    check_boundaries(config, draw_capacity(space, s, rng), kBoundaryStream + s, report);
  }

  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::stream(seed, trial);
    const FiniteSpace space = draw_space(sizes, rng);
    const Capacity nu = draw_capacity(space, trial, rng);
    check_boundaries(config, nu, trial, report);

    const FuzzyFunction f = random_function(space, rng);
    const FuzzyFunction g = raise_function(f, rng);
    const double lo = config(nu, f);
    const double hi = config(nu, g);
    if (lo > hi + comparison_tolerance(config)) {
      report.violations.push_back({"monotonicity", nu, {f, g}, std::nullopt, std::nullopt, lo, hi, lo - hi, trial});
    }
  }
  return report;
}

bool comonotone(const FuzzyFunction& f, const FuzzyFunction& g) {
  if (!(f.space() == g.space())) return false;
  for (std::size_t x = 0; x < f.size(); ++x) {
    for (std::size_t y = x + 1; y < f.size(); ++y) {
      if ((f[x] - f[y]) * (g[x] - g[y]) < 0.0) return false;
    }
  }
  return true;
}

std::pair<FuzzyFunction, FuzzyFunction> generate_comonotone_pair(const FiniteSpace& space, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = space.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.index(0, i - 1)]);

  auto sorted_values = [&] {
    std::vector<double> v(n);
    const bool coarse = rng.chance(0.3);
    for (auto& x : v) {
      x = rng.uniform();
      if (coarse) x = std::round(x * 10.0) / 10.0;
    }
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto a = sorted_values();
  const auto b = sorted_values();
  std::vector<double> fv(n);
  std::vector<double> gv(n);
  for (std::size_t k = 0; k < n; ++k) {
    fv[order[k]] = a[k];
    gv[order[k]] = b[k];
  }
  return {FuzzyFunction(space, std::move(fv)), FuzzyFunction(space, std::move(gv))};
}

double maxitivity_gap(const IntegralConfig& config, const Capacity& nu, const FuzzyFunction& f,
                      const FuzzyFunction& g) {
  if (!comonotone(f, g)) throw PreconditionError("maxitivity check requires a comonotone pair");
  const double joined = config(nu, pointwise_max(f, g));
  return joined - std::max(config(nu, f), config(nu, g));
}

PropertyReport check_comonotone_maxitivity(const IntegralConfig& config, std::size_t trials, std::uint64_t seed,
                                           const std::vector<std::size_t>& sizes) {
  PropertyReport report{"comonotone-maxitivity",
                        config.kind_name() + (config.operators().empty() ? "" : " " + config.operators()),
                        trials, seed, {}, {}, std::nullopt};
  note_tolerance(config, report);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::stream(seed, trial);
    const FiniteSpace space = draw_space(sizes, rng);
    const Capacity nu = draw_capacity(space, trial, rng);
    auto [f, g] = generate_comonotone_pair(space, rng.next());
    const double joined = config(nu, pointwise_max(f, g));
    const double separate = std::max(config(nu, f), config(nu, g));
    const double gap = joined - separate;
    if (std::abs(gap) > comparison_tolerance(config)) {
      report.violations.push_back(
          {"maxitivity", nu, {std::move(f), std::move(g)}, std::nullopt, std::nullopt, joined, separate, gap, trial});
    }
  }
  return report;
}

double homogeneity_gap(const IntegralConfig& config, const BinaryOperator& star, const Capacity& nu,
                       const FuzzyFunction& f, double c) {
  return config(nu, apply_star(star, c, f)) - star(c, config(nu, f));
}

PropertyReport check_star_homogeneity(const IntegralConfig& config, std::size_t trials, std::uint64_t seed,
                                      const HomogeneityOptions& options) {
  const BinaryOperator star = resolve_star(config, options);
  PropertyReport report{"star-homogeneity",
                        config.kind_name() + (config.operators().empty() ? "" : " " + config.operators()) +
                            " *=" + star.describe(),
                        trials, seed, {}, {}, std::nullopt};
  note_tolerance(config, report);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::stream(seed, trial);
    const FiniteSpace space = draw_space(options.sizes, rng);
    const Capacity nu = draw_capacity(space, trial, rng);
    const FuzzyFunction f = random_function(space, rng);
    double c = rng.uniform();
    if (rng.chance(0.1)) c = 0.0;
    if (rng.chance(0.1)) c = 1.0;
    const double left = config(nu, apply_star(star, c, f));
    const double right = star(c, config(nu, f));
    if (std::abs(left - right) > comparison_tolerance(config)) {
      report.violations.push_back({"homogeneity", nu, {f}, c, std::nullopt, left, right, left - right, trial});
    }
  }
  return report;
}

PropertyReport search_maxitivity_homogeneity(const BinaryOperator& overlap, const GpgFunctional& g, const BinaryOperator& star,
                               std::size_t budget, std::uint64_t seed) {
  const IntegralConfig config = IntegralConfig::go(overlap, g);
  PropertyReport report{"maxitivity-homogeneity-search", config.operators() + " *=" + star.describe(), budget, seed, {}, {}, std::nullopt};
  report.notes.push_back("exploratory search; absence of counterexamples is not a proof");
  if (budget > 0) {
    PropertyReport maxitivity = check_comonotone_maxitivity(config, budget, seed);
    HomogeneityOptions options;
    options.star = star;
    options.exploratory = true;
    PropertyReport homogeneity = check_star_homogeneity(config, budget, mix_seed(seed, 1), options);
    report.notes.push_back("comonotone-maxitivity: " + std::to_string(maxitivity.violations.size()) +
                           " counterexamples in " + std::to_string(budget) + " trials");
    report.notes.push_back("star-homogeneity: " + std::to_string(homogeneity.violations.size()) +
                           " counterexamples in " + std::to_string(budget) + " trials");
    for (auto& v : maxitivity.violations) report.violations.push_back(std::move(v));
    for (auto& v : homogeneity.violations) report.violations.push_back(std::move(v));
  }
  if (g.variant() == GpgFunctional::Variant::Kernel) {
    report.notes.push_back("kernel supremum resolution " + std::to_string(config.kernel_resolution()));
  }
  report.outcome = report.violations.empty() ? "no-counterexample-within-budget" : "counterexample-found";
  return report;
}

PropertyReport check_profile_usc(const LevelProfile& m) {
  PropertyReport report{"usc", m.overlap().describe(), 1, 0, {}, {}, std::nullopt};
  const auto segments = m.segments();
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i > 0 && segments[i].capacity > segments[i - 1].capacity) {
      report.violations.push_back({"nonincreasing-capacity", std::nullopt, {}, std::nullopt, i,
                                   segments[i - 1].capacity, segments[i].capacity,
                                   segments[i].capacity - segments[i - 1].capacity, 0});
    }
    const double at = m.peak(i);
    const double next_capacity = i + 1 < segments.size() ? segments[i + 1].capacity : 0.0;
    const double right_limit = m.overlap()(next_capacity, segments[i].breakpoint);
    if (at < right_limit) {
      report.violations.push_back(
          {"breakpoint-usc", std::nullopt, {}, std::nullopt, i, at, right_limit, right_limit - at, 0});
    }
  }
  return report;
}

double replay(const IntegralConfig& config, const PropertyViolation& v, const std::optional<BinaryOperator>& star) {
  if (!v.capacity) throw PreconditionError("violation '" + v.property + "' carries no replayable instance");
  const Capacity& nu = *v.capacity;
  const FiniteSpace& space = nu.space();
  if (v.property == "unit") return config(nu, FuzzyFunction::constant(space, 1.0)) - 1.0;
  if (v.property == "zero") return config(nu, FuzzyFunction::constant(space, 0.0));
  if (v.property == "monotonicity") return config(nu, v.functions.at(0)) - config(nu, v.functions.at(1));
  if (v.property == "maxitivity") return maxitivity_gap(config, nu, v.functions.at(0), v.functions.at(1));
  if (v.property == "homogeneity") {
    HomogeneityOptions options;
    options.star = star;
    options.exploratory = true;
    return homogeneity_gap(config, resolve_star(config, options), nu, v.functions.at(0), v.scalar.value());
  }
  throw PreconditionError("unknown property '" + v.property + "'");
}

}  // namespace goint

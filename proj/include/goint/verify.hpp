#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "goint/grouping.hpp"
#include "goint/integrals.hpp"
#include "goint/overlap_ops.hpp"
#include "goint/space_measure.hpp"

namespace goint {

/// Tolerance for identities that hold exactly on the exact paths.
inline constexpr double kIdentityTolerance = 1e-9;
/// Tolerance for kernel supremum grid approximations.
inline constexpr double kKernelTolerance = 1e-3;

/// Threshold grid for the first-principles oracle.
struct GridSpec {
  double step = 1e-4;
  bool include_breakpoints = true;
};

/// G(m) evaluated from definitions: m(t) = O(ν(level_set(f, t)), t) on the
/// uniform grid (plus the values of f when include_breakpoints), then max
/// (Max), h(max) (Distorted) or max g(t, m(t)) (Kernel) over the samples.
/// Custom functionals are rejected.
double brute_force_go(const Capacity& nu, const FuzzyFunction& f, const BinaryOperator& overlap,
                      const GpgFunctional& g, const GridSpec& grid = {});

/// One observed failure, with enough of the instance stored to replay it.
struct PropertyViolation {
  std::string property;
  std::optional<Capacity> capacity;
  std::vector<FuzzyFunction> functions;
  /// The constant c of the homogeneity check.
  std::optional<double> scalar;
  /// Segment index of a profile check.
  std::optional<std::size_t> index;
  double left = 0.0;
  double right = 0.0;
  double gap = 0.0;
  std::uint64_t trial = 0;
};

struct PropertyReport {
  std::string property;
  std::string subject;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<PropertyViolation> violations;
  std::vector<std::string> notes;
  /// Only set by search_maxitivity_homogeneity.
  std::optional<std::string> outcome;

  bool passed() const noexcept { return violations.empty(); }
};

inline const std::vector<std::size_t> kDefaultSpaceSizes = {1, 2, 3, 4, 5, 6, 7, 8};

/// I(1_X) = 1 and I(0_X) = 0 once per sampled capacity (one capacity per
/// space size, plus one per trial), and I(f) <= I(g) on `trials` random pairs
/// with g a pointwise raise of f. Capacities cycle through all kinds.
PropertyReport run_boundary_monotonicity_suite(const IntegralConfig& config, const std::vector<std::size_t>& sizes,
                                  std::size_t trials, std::uint64_t seed);

/// Random point order plus two independently drawn sorted value sequences
/// assigned along it, so (f(x)-f(y))(g(x)-g(y)) >= 0 for all x, y.
std::pair<FuzzyFunction, FuzzyFunction> generate_comonotone_pair(const FiniteSpace& space, std::uint64_t seed);

bool comonotone(const FuzzyFunction& f, const FuzzyFunction& g);

/// I(f v g) - (I(f) v I(g)) for one pair; PreconditionError if the pair is
/// not comonotone.
double maxitivity_gap(const IntegralConfig& config, const Capacity& nu, const FuzzyFunction& f,
                      const FuzzyFunction& g);

/// I(f v g) against I(f) v I(g) on `trials` comonotone pairs, tolerance 1e-9.
PropertyReport check_comonotone_maxitivity(const IntegralConfig& config, std::size_t trials, std::uint64_t seed,
                                           const std::vector<std::size_t>& sizes = kDefaultSpaceSizes);

struct HomogeneityOptions {
  /// The * of c_X * f and c * I(f). Defaults to the config's t-norm (min for Sugeno).
  std::optional<BinaryOperator> star;
  /// Allows GO configurations, which carry no t-norm of their own.
  bool exploratory = false;
  std::vector<std::size_t> sizes = kDefaultSpaceSizes;
};

/// I(c_X * f) - c * I(f) for one instance.
double homogeneity_gap(const IntegralConfig& config, const BinaryOperator& star, const Capacity& nu,
                       const FuzzyFunction& f, double c);

/// I(c_X * f) against c * I(f) for random c and f, tolerance 1e-9.
/// Requires a TNormed or Sugeno config, or a GO config with
/// options.exploratory and options.star set.
PropertyReport check_star_homogeneity(const IntegralConfig& config, std::size_t trials, std::uint64_t seed,
                                      const HomogeneityOptions& options = {});

/// Searches for counterexamples to comonotone maxitivity and *-homogeneity
/// of the GO(O, G) integral. Never claims either property holds: the outcome
/// is "counterexample-found" or "no-counterexample-within-budget".
PropertyReport search_maxitivity_homogeneity(const BinaryOperator& overlap, const GpgFunctional& g, const BinaryOperator& star,
                               std::size_t budget, std::uint64_t seed);

/// Plateau capacities nonincreasing and m(w_i) >= O(c_{i+1}, w_i) at every
/// breakpoint (c_{k+1} = 0): the step-profile form of upper semicontinuity.
PropertyReport check_profile_usc(const LevelProfile& m);

/// Re-evaluates a stored violation and returns its gap.
double replay(const IntegralConfig& config, const PropertyViolation& v,
              const std::optional<BinaryOperator>& star = std::nullopt);

}  // namespace goint

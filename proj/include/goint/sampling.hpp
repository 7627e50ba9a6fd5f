#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "goint/grouping.hpp"
#include "goint/overlap_ops.hpp"
#include "goint/space_measure.hpp"

namespace goint {

/// Deterministic random stream. Trials derive their own stream from
/// (seed, trial index) so results do not depend on evaluation order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  std::size_t index(std::size_t lo, std::size_t hi);
  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Random capacity of the given kind on `space`. Tables require n <= 20.
Capacity random_capacity(const FiniteSpace& space, CapacityKind kind, Rng& rng);
/// Random capacity with the kind drawn uniformly from all five.
Capacity random_capacity(const FiniteSpace& space, Rng& rng);

/// Random function on `space`. About a third of the draws snap values to a
/// coarse grid so ties, zeros and ones occur.
FuzzyFunction random_function(const FiniteSpace& space, Rng& rng);

/// Pointwise raise: g(x) = f(x) + u (1 - f(x)) with u random (sometimes 0).
FuzzyFunction raise_function(const FuzzyFunction& f, Rng& rng);

/// Random profile: k uniform in 1..6, sorted uniform breakpoints, capacities
/// sorted descending.
LevelProfile random_profile(const BinaryOperator& overlap, Rng& rng);

/// A certified t-overlap operator drawn from the builtin families.
BinaryOperator random_overlap(Rng& rng);

}  // namespace goint

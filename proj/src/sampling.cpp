#include "goint/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "goint/errors.hpp"

namespace goint {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::vector<double> simplex_weights(std::size_t n, Rng& rng) {
  std::vector<double> w(n);
  for (auto& v : w) v = -std::log(1.0 - rng.uniform());
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& v : w) v /= sum;
  return w;
}

double snap(double v, int steps) { return std::round(v * steps) / steps; }

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index * 0xd1b54a32d192ed03ull));
}

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) { return Rng(mix_seed(seed, index)); }

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::size_t Rng::index(std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
}

Capacity random_capacity(const FiniteSpace& space, CapacityKind kind, Rng& rng) {
  const std::size_t n = space.size();
  switch (kind) {
    case CapacityKind::Possibility: {
      std::vector<double> d(n);
      for (auto& v : d) v = rng.uniform();
      d[rng.index(0, n - 1)] = 1.0;
      return build_capacity(space, PossibilitySpec{std::move(d)});
    }
    case CapacityKind::Additive:
      return build_capacity(space, AdditiveSpec{simplex_weights(n, rng)});
    case CapacityKind::SugenoLambda: {
      if (n == 1) return build_capacity(space, AdditiveSpec{{1.0}});
      std::vector<double> d(n);
      for (auto& v : d) v = rng.uniform(0.02, 0.98);
      return build_capacity(space, SugenoLambdaSpec{std::move(d), std::nullopt});
    }
    case CapacityKind::Distorted: {
      Distortion h = rng.chance(0.7) ? Distortion::power(rng.uniform(0.3, 3.0))
                                     : Distortion::piecewise_linear({{0.0, 0.0},
                                                                     {0.5, rng.uniform(0.0, 1.0)},
                                                                     {1.0, 1.0}});
      return build_capacity(space, DistortedSpec{simplex_weights(n, rng), std::move(h)});
    }
    case CapacityKind::Table: {
      if (n > kMaxTableSpaceSize) throw PreconditionError("random tables are limited to 20 points");
      // Random monotone table: each subset takes the max over its one-point
      // removals, raised by a random share of the remaining headroom.
      const std::size_t total = std::size_t{1} << n;
      std::vector<double> t(total, 0.0);
      std::vector<std::size_t> order(total);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [](std::size_t a, std::size_t b) {
        return Subset(a).count() < Subset(b).count();
      });
      const std::uint64_t full = space.full().bits();
      for (std::size_t bits : order) {
        if (bits == 0) continue;
        if (bits == full) {
          t[bits] = 1.0;
          continue;
        }
        double floor = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (Subset(bits).contains(i)) floor = std::max(floor, t[Subset(bits).without(i).bits()]);
        }
        double v = floor + rng.uniform() * (1.0 - floor) * 0.6;
        if (rng.chance(0.2)) v = floor;
        t[bits] = v;
      }
      TableSpec spec;
      for (std::size_t bits = 0; bits < total; ++bits) spec.values.emplace(Subset(bits), t[bits]);
      return build_capacity(space, spec);
    }
  }
  throw PreconditionError("unknown capacity kind");
}

Capacity random_capacity(const FiniteSpace& space, Rng& rng) {
  static constexpr CapacityKind kinds[] = {CapacityKind::Table, CapacityKind::Possibility,
                                           CapacityKind::Additive, CapacityKind::SugenoLambda,
                                           CapacityKind::Distorted};
  CapacityKind kind = kinds[rng.index(0, 4)];
  if (kind == CapacityKind::Table && space.size() > 10) kind = CapacityKind::Possibility;
  return random_capacity(space, kind, rng);
}

FuzzyFunction random_function(const FiniteSpace& space, Rng& rng) {
  std::vector<double> v(space.size());
  const bool coarse = rng.chance(0.35);
  for (auto& x : v) {
    x = rng.uniform();
    if (coarse) x = snap(x, 10);
  }
  return FuzzyFunction(space, std::move(v));
}

FuzzyFunction raise_function(const FuzzyFunction& f, Rng& rng) {
  std::vector<double> v(f.values().begin(), f.values().end());
  for (auto& x : v) {
    if (rng.chance(0.3)) continue;
    x = std::min(1.0, x + rng.uniform() * (1.0 - x));
  }
  return FuzzyFunction(f.space(), std::move(v));
}

LevelProfile random_profile(const BinaryOperator& overlap, Rng& rng) {
  const std::size_t k = rng.index(1, 6);
  std::vector<double> w;
  while (w.size() < k) {
    const double v = 1.0 - rng.uniform();  // (0, 1]
    if (std::find(w.begin(), w.end(), v) == w.end()) w.push_back(v);
  }
  std::sort(w.begin(), w.end());
  std::vector<double> c(k);
  for (auto& v : c) v = rng.uniform();
  std::sort(c.begin(), c.end(), std::greater<>());
  std::vector<Segment> segments;
  segments.reserve(k);
  for (std::size_t i = 0; i < k; ++i) segments.push_back({w[i], c[i]});
  return LevelProfile(overlap, std::move(segments));
}

BinaryOperator random_overlap(Rng& rng) {
  switch (rng.index(0, 5)) {
    case 0: return BinaryOperator::min();
    case 1: return BinaryOperator::product();
    case 2: return BinaryOperator::lukasiewicz();
    case 3: return BinaryOperator::power_product(rng.uniform(0.5, 3.0));
    case 4: return BinaryOperator::min_power(rng.uniform(0.5, 3.0));
    default: return BinaryOperator::power_product(1.0);
  }
}

}  // namespace goint

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "goint/errors.hpp"
#include "goint/integrals.hpp"
#include "goint/sampling.hpp"
#include "oracles.hpp"

using namespace goint;

namespace {

const FiniteSpace kAB({"a", "b"});

Capacity possibility_ab() { return build_capacity(kAB, PossibilitySpec{{1.0, 0.5}}); }
FuzzyFunction f_ab() { return FuzzyFunction(kAB, {0.3, 0.9}); }

std::vector<GpgFunctional> builtin_gpgs() {
  return {GpgFunctional::max(), GpgFunctional::distorted(Distortion::power(2.0)),
          GpgFunctional::distorted(Distortion::power(0.5)), GpgFunctional::kernel(Kernel::tilt(1.0))};
}

/// Capacity and function on a permuted copy of the space.
std::pair<Capacity, FuzzyFunction> permuted(const Capacity& nu, const FuzzyFunction& f,
                                            const std::vector<std::size_t>& perm) {
  const std::size_t n = f.size();
  std::vector<std::string> labels(n);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[perm[i]] = nu.space().label(i);
    values[perm[i]] = f[i];
  }
  const FiniteSpace space(labels);
  const auto table = expand_to_table(nu);
  std::vector<double> moved(table.size());
  for (std::uint64_t bits = 0; bits < table.size(); ++bits) {
    std::uint64_t image = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((bits >> i) & 1u) image |= std::uint64_t{1} << perm[i];
    }
    moved[image] = table[bits];
  }
  return {Capacity::unchecked_table(space, moved), FuzzyFunction(space, values)};
}

}  // namespace

TEST(Sugeno, FixtureAndBoundaries) {
  const Capacity nu = possibility_ab();
  EXPECT_EQ(sugeno_integral(nu, f_ab()), 0.5);
  EXPECT_EQ(sugeno_integral(nu, f_ab()), oracle::sugeno_by_subsets(nu, f_ab()));
  EXPECT_NEAR(oracle::t_normed_by_threshold_grid(nu, f_ab(), [](double a, double b) { return std::min(a, b); },
                                                 10000),
              0.5, 1e-12);
  EXPECT_EQ(sugeno_integral(nu, FuzzyFunction::constant(kAB, 0.37)), 0.37);
  EXPECT_EQ(sugeno_integral(nu, FuzzyFunction::constant(kAB, 0.0)), 0.0);
}

TEST(Sugeno, MatchesSubsetFormula) {
  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteSpace space = FiniteSpace::indexed(1 + trial % 8);
    const Capacity nu = random_capacity(space, rng);
    const FuzzyFunction f = random_function(space, rng);
    EXPECT_EQ(sugeno_integral(nu, f), oracle::sugeno_by_subsets(nu, f));
  }
}

TEST(TNormed, FixtureAndGridOracle) {
  const Capacity nu = possibility_ab();
  EXPECT_DOUBLE_EQ(t_normed_integral(nu, f_ab(), BinaryOperator::product()), 0.45);
  const double grid = oracle::t_normed_by_threshold_grid(nu, f_ab(), [](double a, double b) { return a * b; }, 10000);
  EXPECT_NEAR(grid, 0.45, 1e-12);
  EXPECT_EQ(t_normed_integral(nu, FuzzyFunction::constant(kAB, 0.0), BinaryOperator::lukasiewicz()), 0.0);
}

TEST(TNormed, MinReproducesSugeno) {
  Rng rng(102);
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteSpace space = FiniteSpace::indexed(1 + trial % 8);
    const Capacity nu = random_capacity(space, rng);
    const FuzzyFunction f = random_function(space, rng);
    EXPECT_EQ(t_normed_integral(nu, f, BinaryOperator::min()), sugeno_integral(nu, f));
    for (const auto& star : {BinaryOperator::product(), BinaryOperator::lukasiewicz()}) {
      EXPECT_NEAR(t_normed_integral(nu, f, star), oracle::t_normed_by_subsets(nu, f, star), 1e-15);
    }
  }
}

TEST(TNormed, RejectsNonNorms) {
  EXPECT_THROW(t_normed_integral(possibility_ab(), f_ab(), BinaryOperator::power_product(2.0)), ConfigurationError);
  EXPECT_THROW(t_normed_integral(possibility_ab(), f_ab(), BinaryOperator::mean()), ConfigurationError);
  EXPECT_THROW(IntegralConfig::t_normed(BinaryOperator::power_product(2.0)), ConfigurationError);
}

TEST(GoIntegral, Fixtures) {
  const Capacity nu = possibility_ab();
  EXPECT_EQ(go_integral(nu, f_ab(), BinaryOperator::min(), GpgFunctional::max()), 0.5);
  EXPECT_NEAR(go_integral(nu, f_ab(), BinaryOperator::power_product(2.0), GpgFunctional::max()), 0.2025, 1e-15);
  for (const auto& g : builtin_gpgs()) {
    EXPECT_EQ(go_integral(nu, FuzzyFunction::constant(kAB, 1.0), BinaryOperator::product(), g), 1.0) << g.describe();
    EXPECT_EQ(go_integral(nu, FuzzyFunction::constant(kAB, 0.0), BinaryOperator::product(), g), 0.0) << g.describe();
  }
}

TEST(GoIntegral, RejectsNonOverlaps) {
  EXPECT_THROW(go_integral(possibility_ab(), f_ab(), BinaryOperator::mean(), GpgFunctional::max()),
               ConfigurationError);
  EXPECT_THROW(IntegralConfig::go(BinaryOperator::asym_test(), GpgFunctional::max()), ConfigurationError);
  const auto custom_min = BinaryOperator::custom("my_min", [](double a, double b) { return std::min(a, b); });
  EXPECT_EQ(go_integral(possibility_ab(), f_ab(), custom_min, GpgFunctional::max()), 0.5);
}

TEST(GoIntegral, RejectsMismatchedSpaces) {
  EXPECT_THROW(go_integral(possibility_ab(), FuzzyFunction(FiniteSpace({"a", "c"}), {0.1, 0.2}),
                           BinaryOperator::min(), GpgFunctional::max()),
               PreconditionError);
}

TEST(GoIntegral, ReducesToSugenoAndTNormed) {
  Rng rng(103);
  for (int trial = 0; trial < 300; ++trial) {
    const FiniteSpace space = FiniteSpace::indexed(1 + trial % 8);
    const Capacity nu = random_capacity(space, rng);
    const FuzzyFunction f = random_function(space, rng);
    EXPECT_EQ(go_integral(nu, f, BinaryOperator::min(), GpgFunctional::max()), sugeno_integral(nu, f));
    for (const auto& star : {BinaryOperator::min(), BinaryOperator::product(), BinaryOperator::lukasiewicz()}) {
      EXPECT_EQ(go_integral(nu, f, star, GpgFunctional::max()), t_normed_integral(nu, f, star));
    }
  }
}

TEST(Choquet, Fixtures) {
  EXPECT_NEAR(choquet_integral(build_capacity(kAB, AdditiveSpec{{0.5, 0.5}}), f_ab()), 0.6, 1e-15);
  EXPECT_NEAR(choquet_integral(possibility_ab(), f_ab()), 0.6, 1e-15);
  EXPECT_NEAR(choquet_integral(possibility_ab(), FuzzyFunction::constant(kAB, 0.42)), 0.42, 1e-15);
}

TEST(Choquet, MatchesPermutationFormulaAndWeightedMean) {
  Rng rng(104);
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteSpace space = FiniteSpace::indexed(1 + trial % 8);
    const Capacity nu = random_capacity(space, rng);
    const FuzzyFunction f = random_function(space, rng);
    EXPECT_NEAR(choquet_integral(nu, f), oracle::choquet_by_permutation(nu, f), 1e-12);

    const Capacity additive = random_capacity(space, CapacityKind::Additive, rng);
    double mean = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) mean += additive.point_data()[i] * f[i];
    EXPECT_NEAR(choquet_integral(additive, f), mean, 1e-12);
  }
}

TEST(DiscreteAggregate, Fixtures) {
  const Capacity nu = possibility_ab();
  EXPECT_NEAR(discrete_go_aggregate(nu, f_ab(), BinaryOperator::min(), DiscreteGpg(DiscreteGpg::Family::ProbSum)),
              0.65, 1e-15);
  EXPECT_EQ(discrete_go_aggregate(nu, FuzzyFunction::constant(kAB, 0.0), BinaryOperator::min(),
                                  DiscreteGpg(DiscreteGpg::Family::ProbSum)),
            0.0);
}

TEST(DiscreteAggregate, MaxNMatchesGoWithMax) {
  Rng rng(105);
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteSpace space = FiniteSpace::indexed(1 + trial % 8);
    const Capacity nu = random_capacity(space, rng);
    const FuzzyFunction f = random_function(space, rng);
    const BinaryOperator o = random_overlap(rng);
    EXPECT_EQ(discrete_go_aggregate(nu, f, o, DiscreteGpg(DiscreteGpg::Family::MaxN)),
              go_integral(nu, f, o, GpgFunctional::max()));
  }
}

TEST(Integrals, InvariantUnderRelabeling) {
  Rng rng(106);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const FiniteSpace space = FiniteSpace::indexed(n);
    const Capacity nu = random_capacity(space, rng);
    const FuzzyFunction f = random_function(space, rng);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.index(0, i - 1)]);
    const auto [nu2, f2] = permuted(nu, f, perm);

    EXPECT_EQ(sugeno_integral(nu, f), sugeno_integral(nu2, f2));
    EXPECT_EQ(t_normed_integral(nu, f, BinaryOperator::product()),
              t_normed_integral(nu2, f2, BinaryOperator::product()));
    EXPECT_NEAR(choquet_integral(nu, f), choquet_integral(nu2, f2), 1e-15);
    for (const auto& g : builtin_gpgs()) {
      EXPECT_EQ(go_integral(nu, f, BinaryOperator::lukasiewicz(), g),
                go_integral(nu2, f2, BinaryOperator::lukasiewicz(), g));
    }
  }
}

TEST(IntegralConfig, DispatchesAndDescribes) {
  const Capacity nu = possibility_ab();
  EXPECT_EQ(IntegralConfig::sugeno()(nu, f_ab()), 0.5);
  EXPECT_NEAR(IntegralConfig::choquet()(nu, f_ab()), 0.6, 1e-15);
  EXPECT_DOUBLE_EQ(IntegralConfig::t_normed(BinaryOperator::product())(nu, f_ab()), 0.45);
  const auto go = IntegralConfig::go(BinaryOperator::power_product(2.0), GpgFunctional::max());
  EXPECT_NEAR(go(nu, f_ab()), 0.2025, 1e-15);
  EXPECT_EQ(go.operators(), "O=power_product:p=2;G=max");
  EXPECT_EQ(go.kind_name(), "go");
}

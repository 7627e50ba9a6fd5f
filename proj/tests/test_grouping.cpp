#include <gtest/gtest.h>

#include <cmath>

#include "goint/errors.hpp"
#include "goint/grouping.hpp"
#include "goint/sampling.hpp"
#include "goint/verify.hpp"

using namespace goint;

namespace {

const FiniteSpace kAB({"a", "b"});

Capacity possibility_ab() { return build_capacity(kAB, PossibilitySpec{{1.0, 0.5}}); }

LevelProfile fixture_profile() {
  return build_level_profile(possibility_ab(), FuzzyFunction(kAB, {0.3, 0.9}), BinaryOperator::min());
}

}  // namespace

TEST(BuildLevelProfile, PossibilityFixture) {
  const LevelProfile m = fixture_profile();
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m.segments()[0], (Segment{0.3, 1.0}));
  EXPECT_EQ(m.segments()[1], (Segment{0.9, 0.5}));
}

TEST(BuildLevelProfile, ConstantFunctions) {
  const Capacity nu = possibility_ab();
  const LevelProfile zero = build_level_profile(nu, FuzzyFunction::constant(kAB, 0.0), BinaryOperator::min());
  EXPECT_TRUE(zero.empty());
  EXPECT_EQ(eval_profile(zero, 0.0), 0.0);
  EXPECT_EQ(eval_profile(zero, 0.7), 0.0);

  const LevelProfile one = build_level_profile(nu, FuzzyFunction::constant(kAB, 1.0), BinaryOperator::min());
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.segments()[0], (Segment{1.0, 1.0}));
}

TEST(BuildLevelProfile, DeduplicatesRepeatedValues) {
  const FiniteSpace space = FiniteSpace::indexed(4);
  const Capacity nu = build_capacity(space, AdditiveSpec{{0.25, 0.25, 0.25, 0.25}});
  const LevelProfile m =
      build_level_profile(nu, FuzzyFunction(space, {0.4, 0.0, 0.4, 0.8}), BinaryOperator::product());
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m.segments()[0], (Segment{0.4, 0.75}));
  EXPECT_EQ(m.segments()[1], (Segment{0.8, 0.25}));
}

TEST(EvalProfile, SegmentLookup) {
  const LevelProfile m = fixture_profile();
  EXPECT_EQ(eval_profile(m, 0.3), 0.3);    // right end of segment 1
  EXPECT_EQ(eval_profile(m, 0.0), 0.0);
  EXPECT_EQ(eval_profile(m, 0.95), 0.0);
  EXPECT_EQ(eval_profile(m, 0.31), 0.31);
  EXPECT_EQ(eval_profile(m, 0.9), 0.5);
  EXPECT_THROW(eval_profile(m, 1.5), PreconditionError);
}

TEST(EvalProfile, AgreesWithDirectLevelSetEvaluation) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteSpace space = FiniteSpace::indexed(1 + trial % 8);
    const Capacity nu = random_capacity(space, rng);
    const FuzzyFunction f = random_function(space, rng);
    const BinaryOperator o = random_overlap(rng);
    const LevelProfile m = build_level_profile(nu, f, o);
    std::vector<double> ts{0.0, 1.0};
    for (double v : f.values()) {
      ts.push_back(v);
      ts.push_back(std::nextafter(v, 1.0));
      ts.push_back(std::nextafter(v, 0.0));
    }
    for (int j = 0; j < 50; ++j) ts.push_back(rng.uniform());
    for (double t : ts) {
      if (t < 0.0 || t > 1.0) continue;
      EXPECT_EQ(eval_profile(m, t), o(nu.value(level_set(f, t)), t)) << "t=" << t;
    }
  }
}

TEST(ApplyGpg, MaxAndDistorted) {
  const LevelProfile m = fixture_profile();
  EXPECT_EQ(apply_gpg(GpgFunctional::max(), m).value, 0.5);
  EXPECT_EQ(apply_gpg(GpgFunctional::max(), LevelProfile(BinaryOperator::min(), {})).value, 0.0);
  EXPECT_EQ(apply_gpg(GpgFunctional::distorted(Distortion::power(2.0)), m).value, 0.25);
  EXPECT_FALSE(apply_gpg(GpgFunctional::max(), m).grid_resolution.has_value());
}

TEST(ApplyGpg, KernelReportsResolution) {
  const LevelProfile m = fixture_profile();
  const GpgValue v = apply_gpg(GpgFunctional::kernel(Kernel::tilt(1.0)), m, 512);
  ASSERT_TRUE(v.grid_resolution.has_value());
  EXPECT_EQ(*v.grid_resolution, 512);
  EXPECT_GT(v.value, 0.0);
  EXPECT_LE(v.value, 0.5);
}

TEST(ApplyGpg, MaxIsExactMaximumOverGridWithBreakpoints) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const LevelProfile m = random_profile(random_overlap(rng), rng);
    double best = 0.0;
    for (int j = 0; j <= 1000; ++j) best = std::max(best, eval_profile(m, j / 1000.0));
    for (const Segment& s : m.segments()) best = std::max(best, eval_profile(m, s.breakpoint));
    EXPECT_EQ(apply_gpg(GpgFunctional::max(), m).value, best);
  }
}

TEST(ApplyGpg, KernelWithZeroTiltIsMax) {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const LevelProfile m = random_profile(random_overlap(rng), rng);
    EXPECT_NEAR(apply_gpg(GpgFunctional::kernel(Kernel::tilt(0.0)), m).value,
                apply_gpg(GpgFunctional::max(), m).value, 1e-12);
  }
}

TEST(ApplyGpg, UnitPowerDistortionIsMax) {
  Rng rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const LevelProfile m = random_profile(random_overlap(rng), rng);
    EXPECT_EQ(apply_gpg(GpgFunctional::distorted(Distortion::power(1.0)), m).value,
              apply_gpg(GpgFunctional::max(), m).value);
  }
}

TEST(ApplyGpg, ConstantKernelCoincidesWithDistorted) {
  Rng rng(23);
  const Distortion h = Distortion::power(1.7);
  for (int trial = 0; trial < 50; ++trial) {
    const LevelProfile m = random_profile(random_overlap(rng), rng);
    EXPECT_NEAR(apply_gpg(GpgFunctional::kernel(Kernel::from_distortion(h)), m).value,
                apply_gpg(GpgFunctional::distorted(h), m).value, 1e-12);
  }
}

TEST(ProfileShape, SegmentsAreNondecreasingInside) {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const FiniteSpace space = FiniteSpace::indexed(1 + trial % 8);
    const LevelProfile m = build_level_profile(random_capacity(space, rng), random_function(space, rng),
                                               random_overlap(rng));
    for (std::size_t i = 0; i < m.size(); ++i) {
      const double a = m.segment_start(i);
      const double b = m.segments()[i].breakpoint;
      double prev = -1.0;
      for (int j = 1; j <= 10; ++j) {
        const double t = a + (b - a) * j / 11.0;
        const double v = eval_profile(m, t);
        EXPECT_GE(v, prev);
        prev = v;
      }
      EXPECT_GE(eval_profile(m, b), prev);
    }
    EXPECT_TRUE(check_profile_usc(m).passed());
  }
}

TEST(LevelProfileShape, RejectsMalformedSegments) {
  EXPECT_THROW(LevelProfile(BinaryOperator::min(), {{0.5, 1.0}, {0.5, 0.2}}), PreconditionError);
  EXPECT_THROW(LevelProfile(BinaryOperator::min(), {{0.0, 1.0}}), PreconditionError);
  EXPECT_THROW(LevelProfile(BinaryOperator::min(), {{0.5, 1.2}}), PreconditionError);
  EXPECT_NO_THROW(LevelProfile(BinaryOperator::min(), {{0.2, 0.1}, {0.5, 0.9}}));
}

TEST(CheckGpgDiscrete, Examples) {
  EXPECT_TRUE(check_gpg_discrete(DiscreteGpg(DiscreteGpg::Family::MaxN), 3, 20).passed());
  EXPECT_TRUE(check_gpg_discrete(DiscreteGpg(DiscreteGpg::Family::ProbSum), 2, 50).passed());

  const AxiomReport mean = check_gpg_discrete(DiscreteGpg(DiscreteGpg::Family::MeanN), 2, 10);
  const Counterexample* cx = mean.find("one-coordinate");
  ASSERT_NE(cx, nullptr);
  EXPECT_EQ(cx->inputs, (std::vector<double>{1.0, 0.0}));
  EXPECT_EQ(cx->observed, (std::vector<double>{0.5}));
}

TEST(CheckGpgDiscrete, LargeAritiesAreSampled) {
  const AxiomReport r = check_gpg_discrete(DiscreteGpg(DiscreteGpg::Family::ProbSum), 6, 10, 42);
  EXPECT_TRUE(r.passed());
  ASSERT_FALSE(r.notes.empty());
  EXPECT_FALSE(check_gpg_discrete(DiscreteGpg(DiscreteGpg::Family::MeanN), 6, 10, 42).passed());
}

TEST(CheckGpgFunctional, BuiltinsPass) {
  EXPECT_TRUE(check_gpg_functional(GpgFunctional::max(), 500, 1).passed());
  EXPECT_TRUE(check_gpg_functional(GpgFunctional::kernel(Kernel::tilt(1.0)), 500, 1, 1024).passed());
  EXPECT_TRUE(check_gpg_functional(GpgFunctional::distorted(Distortion::power(0.5)), 200, 2).passed());
}

TEST(CheckGpgFunctional, ZeroTrialsChecksOnlyZeroFunction) {
  const AxiomReport r = check_gpg_functional(GpgFunctional::max(), 0, 1);
  EXPECT_TRUE(r.passed());
  const auto constant = GpgFunctional::custom("half", [](const LevelProfile&) { return 0.5; });
  const AxiomReport bad = check_gpg_functional(constant, 0, 1);
  ASSERT_EQ(bad.counterexamples.size(), 1u);
  EXPECT_EQ(bad.counterexamples[0].axiom, "zero-function");
}

TEST(CheckGpgFunctional, CatchesBrokenFunctionals) {
  // Sum of breakpoint peaks is neither bounded by 1 at the top nor monotone.
  const auto sum = GpgFunctional::custom("sum", [](const LevelProfile& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) s += m.peak(i);
    return s;
  });
  const AxiomReport r = check_gpg_functional(sum, 200, 9);
  EXPECT_NE(r.find("attains-one"), nullptr);

  const auto inverted = GpgFunctional::custom("inverted", [](const LevelProfile& m) {
    if (m.empty()) return 0.0;
    return 1.0 - m.segments()[0].capacity * 0.5;
  });
  EXPECT_NE(check_gpg_functional(inverted, 200, 9).find("monotonicity"), nullptr);

  const auto bad_kernel = GpgFunctional::kernel(Kernel::custom("lift", [](double, double a) { return 0.5 + a / 2; }));
  EXPECT_NE(check_gpg_functional(bad_kernel, 0, 1).find("kernel-admissibility"), nullptr);
}

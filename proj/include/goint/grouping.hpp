#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "goint/distortion.hpp"
#include "goint/overlap_ops.hpp"
#include "goint/space_measure.hpp"

namespace goint {

/// Default per-unit resolution of the kernel supremum grid.
inline constexpr int kDefaultKernelResolution = 4096;

/// One plateau of a level profile: on (previous breakpoint, breakpoint] the
/// level set has capacity `capacity`.
struct Segment {
  double breakpoint;
  double capacity;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Exact step representation of m(t) = O(ν(f_t), t) for a function f on a
/// finite space.
///
/// With breakpoints w_1 < ... < w_k (the distinct positive values of f) and
/// plateau capacities c_i = ν({f >= w_i}):
///
///   m(0) = O(ν(X), 0),  m(t) = O(c_i, t) on (w_{i-1}, w_i],  m(t) = O(0, t) for t > w_k.
///
/// Segments are half-open on the left so that m(w_i) sees the points that
/// attain w_i. Built profiles have nonincreasing capacities, which makes m
/// upper semicontinuous; the constructor only checks shape so that malformed
/// profiles can be represented and diagnosed.
class LevelProfile {
 public:
  /// Throws PreconditionError unless breakpoints are strictly increasing in
  /// (0,1] and capacities lie in [0,1].
  LevelProfile(BinaryOperator overlap, std::vector<Segment> segments);

  const BinaryOperator& overlap() const noexcept { return overlap_; }
  std::span<const Segment> segments() const noexcept { return segments_; }
  bool empty() const noexcept { return segments_.empty(); }
  std::size_t size() const noexcept { return segments_.size(); }

  /// m(t) for t in [0,1].
  double operator()(double t) const;
  /// m at a breakpoint, O(c_i, w_i).
  double peak(std::size_t i) const { return overlap_(segments_[i].capacity, segments_[i].breakpoint); }
  /// Left end of segment i (w_{i-1}, or 0 for the first segment).
  double segment_start(std::size_t i) const { return i == 0 ? 0.0 : segments_[i - 1].breakpoint; }

 private:
  BinaryOperator overlap_;
  std::vector<Segment> segments_;
};

LevelProfile build_level_profile(const Capacity& nu, const FuzzyFunction& f, const BinaryOperator& overlap);

/// m(t); binary search over breakpoints, t = w_i belongs to segment i.
double eval_profile(const LevelProfile& m, double t);

/// Kernel g(t, a) for the kernel grouping functional. Admissible kernels are
/// continuous, nondecreasing in a, with g(t,0)=0 and g(t,1)=1.
class Kernel {
 public:
  enum class Family { Tilt, Distortion, Custom };

  /// g(t, a) = a^(1 + beta t), beta >= 0.
  static Kernel tilt(double beta);
  /// g(t, a) = h(a), constant in t.
  static Kernel from_distortion(Distortion h);
  static Kernel custom(std::string name, std::function<double(double, double)> fn);

  double operator()(double t, double a) const;
  Family family() const noexcept { return family_; }
  double beta() const noexcept { return beta_; }
  std::string describe() const;

 private:
  explicit Kernel(Family family) : family_(family) {}

  Family family_;
  double beta_ = 0.0;
  std::optional<Distortion> distortion_;
  std::string name_;
  std::function<double(double, double)> fn_;
};

/// Grouping functional G on upper semicontinuous functions [0,1] -> [0,1],
/// evaluated on level profiles.
///
///  - Max:          G(m) = max_t m(t)
///  - Distorted(h): G(m) = h(max_t m(t))
///  - Kernel(g):    G(m) = sup_t g(t, m(t))
///  - Custom:       arbitrary callable on the profile; used for negative
///                  controls and carries no guarantees.
class GpgFunctional {
 public:
  enum class Variant { Max, Distorted, Kernel, Custom };

  static GpgFunctional max();
  static GpgFunctional distorted(Distortion h);
  static GpgFunctional kernel(Kernel g);
  static GpgFunctional custom(std::string name, std::function<double(const LevelProfile&)> fn);

  Variant variant() const noexcept { return variant_; }
  const std::optional<Distortion>& distortion() const noexcept { return distortion_; }
  const std::optional<Kernel>& kernel() const noexcept { return kernel_; }
  const std::function<double(const LevelProfile&)>& custom_fn() const noexcept { return custom_; }
  std::string describe() const;

 private:
  explicit GpgFunctional(Variant v) : variant_(v) {}

  Variant variant_;
  std::optional<Distortion> distortion_;
  std::optional<Kernel> kernel_;
  std::string name_;
  std::function<double(const LevelProfile&)> custom_;
};

struct GpgValue {
  double value;
  /// Per-unit resolution of the supremum grid (Kernel variant only).
  std::optional<int> grid_resolution;
};

/// G(m). Max and Distorted are exact: within a segment m is nondecreasing,
/// so the supremum sits at the breakpoints. Kernel takes the maximum of
/// g(t, O(c_i, t)) over ceil(N (w_i - w_{i-1})) + 2 uniform points per
/// segment, both ends included.
GpgValue apply_gpg(const GpgFunctional& g, const LevelProfile& m,
                   int kernel_resolution = kDefaultKernelResolution);

/// n-ary general pseudo-grouping operators. MaxN and ProbSum
/// (1 - prod(1 - x_i)) satisfy the axioms; MeanN is a negative control.
class DiscreteGpg {
 public:
  enum class Family { MaxN, ProbSum, MeanN };

  explicit DiscreteGpg(Family family) : family_(family) {}
  static DiscreteGpg parse(std::string_view name);

  double operator()(std::span<const double> x) const;
  Family family() const noexcept { return family_; }
  std::string describe() const;

 private:
  Family family_;
};

inline constexpr std::size_t kDiscreteSampleCount = 100000;

/// Checks G(0,...,0)=0, G=1 when a coordinate is 1, and coordinatewise
/// monotonicity. Arity 1..4 uses the full (gridN+1)^n grid; larger arities
/// use 10^5 seeded random tuples.
AxiomReport check_gpg_discrete(const DiscreteGpg& g, int arity, int grid_n, std::uint64_t seed = 1);

/// Checks the grouping-functional conditions: G(0)=0 on the empty profile;
/// G(m)=1 on `trials` random profiles reaching m(1)=1; G(m) <= G(m') on
/// `trials` random pairs m <= m' obtained by raising plateau capacities.
/// Continuity in the hypograph topology is not checked.
AxiomReport check_gpg_functional(const GpgFunctional& g, int trials, std::uint64_t seed,
                                 int kernel_resolution = kDefaultKernelResolution);

}  // namespace goint

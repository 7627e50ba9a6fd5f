#pragma once

#include <optional>
#include <string>

#include "goint/grouping.hpp"
#include "goint/overlap_ops.hpp"
#include "goint/space_measure.hpp"

namespace goint {

/// max over the distinct positive values v of f of min(v, ν({f >= v})).
double sugeno_integral(const Capacity& nu, const FuzzyFunction& f);

/// max over the distinct positive values v of f of ν({f >= v}) * v.
/// The supremum over t of ν(f_t) * t is attained at a right endpoint since
/// * is nondecreasing. Throws ConfigurationError unless `star` is a t-norm.
double t_normed_integral(const Capacity& nu, const FuzzyFunction& f, const BinaryOperator& star);

/// G(m) with m(t) = O(ν(f_t), t). Throws ConfigurationError unless O is a
/// t-overlap function.
double go_integral(const Capacity& nu, const FuzzyFunction& f, const BinaryOperator& overlap,
                   const GpgFunctional& g, int kernel_resolution = kDefaultKernelResolution);

/// Sorted formula: sum over ascending distinct values v_i of (v_i - v_{i-1}) ν({f >= v_i}).
double choquet_integral(const Capacity& nu, const FuzzyFunction& f);

/// Gn(O(c_1, w_1), ..., O(c_k, w_k)) over the breakpoints of the level
/// profile; 0 when f is identically 0. With MaxN this is go_integral with Max.
double discrete_go_aggregate(const Capacity& nu, const FuzzyFunction& f, const BinaryOperator& overlap,
                             const DiscreteGpg& gn);

/// A configured integral functional I: C(X,[0,1]) -> [0,1].
///
/// Operator admissibility is established once, here, by running the grid
/// checkers (t-norm for TNormed, t-overlap for GO). The trusted factories
/// skip the checks; they exist for negative controls.
class IntegralConfig {
 public:
  enum class Kind { Sugeno, TNormed, Choquet, GO };

  static IntegralConfig sugeno();
  static IntegralConfig choquet();
  static IntegralConfig t_normed(BinaryOperator star);
  static IntegralConfig go(BinaryOperator overlap, GpgFunctional g);

  static IntegralConfig trusted_t_normed(BinaryOperator star);
  static IntegralConfig trusted_go(BinaryOperator overlap, GpgFunctional g);

  Kind kind() const noexcept { return kind_; }
  /// The t-norm (TNormed), the overlap (GO), or min (Sugeno).
  const std::optional<BinaryOperator>& op() const noexcept { return op_; }
  const std::optional<GpgFunctional>& gpg() const noexcept { return gpg_; }

  int kernel_resolution() const noexcept { return kernel_resolution_; }
  IntegralConfig& set_kernel_resolution(int n);

  double operator()(const Capacity& nu, const FuzzyFunction& f) const;

  /// "sugeno", "choquet", "t_normed", "go".
  std::string kind_name() const;
  /// Operator summary, e.g. "O=min;G=max".
  std::string operators() const;

 private:
  IntegralConfig(Kind kind, std::optional<BinaryOperator> op, std::optional<GpgFunctional> g)
      : kind_(kind), op_(std::move(op)), gpg_(std::move(g)) {}

  Kind kind_;
  std::optional<BinaryOperator> op_;
  std::optional<GpgFunctional> gpg_;
  int kernel_resolution_ = kDefaultKernelResolution;
};

}  // namespace goint

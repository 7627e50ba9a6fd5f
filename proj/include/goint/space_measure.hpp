#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "goint/distortion.hpp"

namespace goint {

/// Largest space any capacity kind accepts (subsets are 64-bit masks).
inline constexpr std::size_t kMaxSpaceSize = 64;
/// Largest space a full subset table may describe (2^20 entries).
inline constexpr std::size_t kMaxTableSpaceSize = 20;
/// Slack allowed by monotonicity checks on computed capacity values.
inline constexpr double kMonotoneTolerance = 1e-12;

/// Subset of a finite space, encoded as its characteristic bit pattern.
/// Bit i set means the point with canonical index i belongs to the subset.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static constexpr Subset empty() { return Subset{}; }
  static Subset full(std::size_t n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static Subset of(std::initializer_list<std::size_t> indices);

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool contains(std::size_t i) const noexcept { return (bits_ >> i) & 1u; }
  constexpr bool is_empty() const noexcept { return bits_ == 0; }
  constexpr bool subset_of(Subset other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  int count() const noexcept;

  constexpr Subset with(std::size_t i) const noexcept { return Subset(bits_ | (std::uint64_t{1} << i)); }
  constexpr Subset without(std::size_t i) const noexcept { return Subset(bits_ & ~(std::uint64_t{1} << i)); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// The ground space: an ordered list of distinct point labels.
///
/// Copies share the label storage. Two spaces are equal when their labels
/// agree in order.
class FiniteSpace {
 public:
  explicit FiniteSpace(std::vector<std::string> labels);
  /// Space with labels "x0", "x1", ...
  static FiniteSpace indexed(std::size_t n);

  std::size_t size() const noexcept { return labels_->size(); }
  const std::vector<std::string>& labels() const noexcept { return *labels_; }
  const std::string& label(std::size_t i) const { return labels_->at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  Subset full() const { return Subset::full(size()); }
  bool contains(Subset a) const { return a.subset_of(full()); }

  /// Subset from point labels; throws PreconditionError on unknown labels.
  Subset subset(std::span<const std::string> labels) const;
  /// "{a,b}" style rendering.
  std::string describe(Subset a) const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// A function X -> [0,1], one value per point.
class FuzzyFunction {
 public:
  FuzzyFunction(FiniteSpace space, std::vector<double> values);
  static FuzzyFunction constant(const FiniteSpace& space, double c);

  const FiniteSpace& space() const noexcept { return space_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }

  /// Pointwise f <= g.
  bool dominated_by(const FuzzyFunction& g) const;

 private:
  FiniteSpace space_;
  std::vector<double> values_;
};

FuzzyFunction pointwise_max(const FuzzyFunction& f, const FuzzyFunction& g);

/// {x : f(x) >= t}, exact comparison on the stored values.
Subset level_set(const FuzzyFunction& f, double t);

namespace detail {
struct CapacityFactory;
}

enum class CapacityKind { Table, Possibility, Additive, SugenoLambda, Distorted };

std::string_view to_string(CapacityKind kind);

/// A normalized monotone set function on the subsets of a finite space.
///
/// Instances come from build_capacity(), which enforces normalization and
/// monotonicity, or from Capacity::unchecked_table() for callers that want
/// to inspect an arbitrary table with validate_capacity().
class Capacity {
 public:
  /// Full table indexed by subset bits; no axiom checks beyond shape.
  static Capacity unchecked_table(FiniteSpace space, std::vector<double> values);

  double value(Subset a) const;

  CapacityKind kind() const noexcept { return kind_; }
  const FiniteSpace& space() const noexcept { return space_; }

  /// Table entries (Table kind only).
  std::span<const double> table() const noexcept { return table_; }
  /// Densities (Possibility, SugenoLambda) or weights (Additive, Distorted).
  std::span<const double> point_data() const noexcept { return point_data_; }
  double lambda() const noexcept { return lambda_; }
  const std::optional<Distortion>& distortion() const noexcept { return distortion_; }

 private:
  friend struct detail::CapacityFactory;
  Capacity(CapacityKind kind, FiniteSpace space) : kind_(kind), space_(std::move(space)) {}

  CapacityKind kind_;
  FiniteSpace space_;
  std::vector<double> table_;
  std::vector<double> point_data_;
  double lambda_ = 0.0;
  std::optional<Distortion> distortion_;
};

/// ν(A). Throws PreconditionError when A is not a subset of ν's space.
double capacity_value(const Capacity& nu, Subset a);

/// Expands any capacity into its full subset table (n <= 20).
std::vector<double> expand_to_table(const Capacity& nu);

struct CapacityViolation {
  std::string axiom;  // "normalization", "monotonicity" or "range"
  std::vector<Subset> witness;
  std::vector<double> values;
};

struct ValidationReport {
  std::vector<CapacityViolation> violations;
  /// Total number of violations found; only the first few are kept.
  std::size_t violation_count = 0;
  /// True when the space was too large for the exhaustive check.
  bool sampled = false;
  std::size_t checks = 0;

  bool passed() const noexcept { return violation_count == 0; }
};

/// Checks normalization, value range and monotonicity.
///
/// For n <= 20 every single-point insertion A -> A+{i} is checked, which
/// covers all comparable pairs by transitivity. Larger spaces are checked on
/// 100000 random insertions drawn from a fixed seed, and the report is flagged
/// as sampled. Axiom 3 of the compactum definition (upper semicontinuity) has
/// no content on a finite space and is not checked.
ValidationReport validate_capacity(const Capacity& nu);

// -- constructive descriptions ------------------------------------------------

struct TableSpec {
  std::map<Subset, double> values;
};
struct PossibilitySpec {
  std::vector<double> densities;
};
struct AdditiveSpec {
  std::vector<double> weights;
};
struct SugenoLambdaSpec {
  std::vector<double> densities;
  /// Empty means solve for λ from the densities.
  std::optional<double> lambda;
};
struct DistortedSpec {
  std::vector<double> weights;
  Distortion distortion;
};

using CapacitySpec =
    std::variant<TableSpec, PossibilitySpec, AdditiveSpec, SugenoLambdaSpec, DistortedSpec>;

/// Builds a validated capacity. Throws ConstructionError naming the failed
/// precondition, or IncompleteTableError for a table missing subsets.
Capacity build_capacity(const FiniteSpace& space, const CapacitySpec& spec);

/// Root of prod(1 + λ g_i) = 1 + λ on (-1, inf) \ {0}, or 0 when the
/// densities already sum to one. Bisection to 1e-10.
double solve_sugeno_lambda(std::span<const double> densities);

}  // namespace goint

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace goint {

/// Tolerance for equalities checked on operator grids.
inline constexpr double kAxiomTolerance = 1e-12;
inline constexpr int kDefaultAxiomGrid = 100;
/// The associativity pass of check_t_norm runs on at most a 64^3 grid.
inline constexpr int kAssociativityGridCap = 64;

/// Binary operation on [0,1]^2, drawn from closed-form families.
///
/// Min, Product, Lukasiewicz, PowerProduct(p) and MinPower(p) are t-overlap
/// functions for every p > 0; Min, Product, Lukasiewicz and the p = 1 members
/// of the power families are also t-norms. Mean ((l+s)/2) and AsymTest (l*s^2)
/// violate the t-overlap axioms and serve as negative controls. Custom wraps
/// an arbitrary callable and is certified for nothing.
class BinaryOperator {
 public:
  enum class Family { Min, Product, Lukasiewicz, PowerProduct, MinPower, Mean, AsymTest, Custom };

  static BinaryOperator min();
  static BinaryOperator product();
  static BinaryOperator lukasiewicz();
  static BinaryOperator power_product(double p);
  static BinaryOperator min_power(double p);
  static BinaryOperator mean();
  static BinaryOperator asym_test();
  static BinaryOperator custom(std::string name, std::function<double(double, double)> fn);

  double operator()(double l, double s) const;

  Family family() const noexcept { return family_; }
  /// Exponent of the power families; 1 otherwise.
  double exponent() const noexcept { return exponent_; }

  /// Descriptor, e.g. "min" or "power_product:p=2".
  std::string describe() const;

  /// Satisfies the t-overlap axioms by family membership.
  bool certified_t_overlap() const noexcept;
  /// Satisfies the t-norm axioms by family membership.
  bool certified_t_norm() const noexcept;

 private:
  BinaryOperator(Family family, double exponent) : family_(family), exponent_(exponent) {}

  Family family_;
  double exponent_ = 1.0;
  std::string custom_name_;
  std::function<double(double, double)> custom_;
};

/// Closed-form evaluation; arguments outside [0,1] are a PreconditionError.
double eval_binary(const BinaryOperator& op, double l, double s);

/// Builds an operator from a family name and optional exponent
/// ("min", "product", "lukasiewicz", "power_product", "min_power", "mean",
/// "asym_test"). Throws ConfigurationError for unknown names or p <= 0.
BinaryOperator make_operator(std::string_view name, std::optional<double> p = std::nullopt);

/// Parses "name" or "name:p=VALUE".
BinaryOperator parse_operator(std::string_view descriptor);

struct Counterexample {
  std::string axiom;
  std::vector<double> inputs;
  std::vector<double> observed;
  /// Size of the violation (distance from the required value).
  double severity = 0.0;
};

/// Outcome of a grid-based axiom check. For each axiom the most severe
/// violation on the grid is kept as the witness (ties go to the first one
/// met in scan order).
struct AxiomReport {
  std::string axiom_set;
  std::string subject;
  int grid = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;

  bool passed() const noexcept { return counterexamples.empty(); }
  const Counterexample* find(std::string_view axiom) const;
};

/// Checks symmetry, boundary-zero, boundary-one and monotonicity on the
/// uniform (gridN+1)^2 grid. A grid pass cannot certify the continuum claim.
AxiomReport check_t_overlap(const BinaryOperator& op, int grid_n = kDefaultAxiomGrid);

/// Checks commutativity, monotonicity and the unit law on the (gridN+1)^2
/// grid, and associativity on the (min(gridN, 64)+1)^3 grid.
AxiomReport check_t_norm(const BinaryOperator& op, int grid_n = kDefaultAxiomGrid);

/// Re-evaluates the operator at a witness; true when the violation reappears.
bool replays(const BinaryOperator& op, const Counterexample& cx);

}  // namespace goint

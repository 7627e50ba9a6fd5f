#pragma once

#include <string>
#include <utility>
#include <vector>

namespace goint {

/// A nondecreasing map h: [0,1] -> [0,1] with h(0)=0 and h(1)=1.
///
/// Used both to distort additive capacities (h o P) and as the outer map of
/// the distorted grouping functional (h o max).
class Distortion {
 public:
  enum class Family { Power, PiecewiseLinear };

  /// h(x) = x^p, p > 0.
  static Distortion power(double p);

  /// Linear interpolation through (x, y) knots. Knots must start at x=0 and
  /// end at x=1 with strictly increasing x; admissibility of the y values is
  /// checked by validate(), not here.
  static Distortion piecewise_linear(std::vector<std::pair<double, double>> knots);

  double operator()(double x) const;

  Family family() const noexcept { return family_; }
  double exponent() const noexcept { return exponent_; }
  const std::vector<std::pair<double, double>>& knots() const noexcept { return knots_; }

  /// Descriptor such as "power:p=2" or "piecewise:4".
  std::string describe() const;

  /// Empty when h(0)=0, h(1)=1 and h is nondecreasing on the 101-point grid;
  /// otherwise the first failed condition.
  std::string validate() const;

 private:
  Distortion() = default;

  Family family_ = Family::Power;
  double exponent_ = 1.0;
  std::vector<std::pair<double, double>> knots_;
};

}  // namespace goint

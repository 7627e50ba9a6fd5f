#include "goint/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "goint/errors.hpp"

namespace goint {

Distortion Distortion::power(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw ConstructionError("distortion", "power exponent must be positive and finite");
  }
  Distortion h;
  h.family_ = Family::Power;
  h.exponent_ = p;
  return h;
}

Distortion Distortion::piecewise_linear(std::vector<std::pair<double, double>> knots) {
  if (knots.size() < 2) {
    throw ConstructionError("distortion", "piecewise-linear distortion needs at least two knots");
  }
  if (knots.front().first != 0.0 || knots.back().first != 1.0) {
    throw ConstructionError("distortion", "piecewise-linear knots must span [0, 1]");
  }
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i].first > knots[i - 1].first)) {
      throw ConstructionError("distortion", "piecewise-linear knot abscissae must be strictly increasing");
    }
  }
  Distortion h;
  h.family_ = Family::PiecewiseLinear;
  h.knots_ = std::move(knots);
  return h;
}

double Distortion::operator()(double x) const {
  x = std::clamp(x, 0.0, 1.0);
  switch (family_) {
    case Family::Power:
      return std::pow(x, exponent_);
    case Family::PiecewiseLinear: {
      auto it = std::lower_bound(knots_.begin(), knots_.end(), x,
                                 [](const auto& knot, double v) { return knot.first < v; });
      if (it == knots_.begin()) return it->second;
      if (it == knots_.end()) return knots_.back().second;
      if (it->first == x) return it->second;
      const auto& [x1, y1] = *it;
      const auto& [x0, y0] = *std::prev(it);
      return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    }
  }
  return 0.0;
}

std::string Distortion::describe() const {
  std::ostringstream os;
  if (family_ == Family::Power) {
    os << "power:p=" << exponent_;
  } else {
    os << "piecewise:" << knots_.size();
  }
  return os.str();
}

std::string Distortion::validate() const {
  if ((*this)(0.0) != 0.0) return "h(0) must equal 0";
  if ((*this)(1.0) != 1.0) return "h(1) must equal 1";
  double prev = (*this)(0.0);
  for (int i = 1; i <= 100; ++i) {
    const double x = static_cast<double>(i) / 100.0;
    const double y = (*this)(x);
    if (y < 0.0 || y > 1.0) return "h must map into [0, 1]";
    if (y < prev) {
      std::ostringstream os;
      os << "h must be nondecreasing (drops at x=" << x << ")";
      return os.str();
    }
    prev = y;
  }
  return {};
}

}  // namespace goint

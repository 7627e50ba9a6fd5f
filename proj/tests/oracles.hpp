#pragma once

// Reference computations used only by tests. Each one takes a different
// route from the library code it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "goint/overlap_ops.hpp"
#include "goint/space_measure.hpp"

namespace goint::oracle {

inline double min_over(const FuzzyFunction& f, std::uint64_t bits) {
  double m = 1.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if ((bits >> i) & 1u) m = std::min(m, f[i]);
  }
  return m;
}

/// max over nonempty subsets A of ν(A) * min_{x in A} f(x).
inline double t_normed_by_subsets(const Capacity& nu, const FuzzyFunction& f,
                                  const std::function<double(double, double)>& star) {
  const std::uint64_t total = std::uint64_t{1} << f.size();
  double best = 0.0;
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    best = std::max(best, star(nu.value(Subset(bits)), min_over(f, bits)));
  }
  return best;
}

inline double sugeno_by_subsets(const Capacity& nu, const FuzzyFunction& f) {
  return t_normed_by_subsets(nu, f, [](double a, double b) { return std::min(a, b); });
}

/// max over the uniform threshold grid of ν(f_t) * t (no breakpoints added).
inline double t_normed_by_threshold_grid(const Capacity& nu, const FuzzyFunction& f,
                                         const std::function<double(double, double)>& star, int points) {
  double best = 0.0;
  for (int j = 0; j <= points; ++j) {
    const double t = static_cast<double>(j) / points;
    Subset level;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] >= t) level = level.with(i);
    }
    best = std::max(best, star(nu.value(level), t));
  }
  return best;
}

/// Choquet integral by the ascending-permutation formula
/// sum_i f_(i) (ν(A_(i)) - ν(A_(i+1))), A_(i) = points ranked i and above.
inline double choquet_by_permutation(const Capacity& nu, const FuzzyFunction& f) {
  std::vector<std::size_t> order(f.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
  double sum = 0.0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    Subset upper;
    for (std::size_t j = k; j < order.size(); ++j) upper = upper.with(order[j]);
    const Subset rest = upper.without(order[k]);
    sum += f[order[k]] * (nu.value(upper) - nu.value(rest));
  }
  return sum;
}

/// Sugeno λ-measure table grown one point at a time with
/// ν(A ∪ {i}) = ν(A) + g_i + λ ν(A) g_i.
inline std::vector<double> lambda_table_by_recursion(const std::vector<double>& g, double lambda) {
  const std::size_t total = std::size_t{1} << g.size();
  std::vector<double> t(total, 0.0);
  for (std::size_t bits = 1; bits < total; ++bits) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(bits));
    const double rest = t[bits & (bits - 1)];
    t[bits] = rest + g[low] + lambda * rest * g[low];
  }
  return t;
}

/// Possibility table by direct enumeration.
inline std::vector<double> possibility_table(const std::vector<double>& d) {
  const std::size_t total = std::size_t{1} << d.size();
  std::vector<double> t(total, 0.0);
  for (std::size_t bits = 1; bits < total; ++bits) {
    for (std::size_t i = 0; i < d.size(); ++i) {
      if ((bits >> i) & 1u) t[bits] = std::max(t[bits], d[i]);
    }
  }
  return t;
}

}  // namespace goint::oracle

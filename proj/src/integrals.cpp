#include "goint/integrals.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "goint/errors.hpp"

namespace goint {

namespace {

void require_shared_space(const Capacity& nu, const FuzzyFunction& f) {
  if (!(nu.space() == f.space())) throw PreconditionError("capacity and function live on different spaces");
}

/// Points ordered by decreasing f; walking this order grows the level sets.
std::vector<std::size_t> descending_order(const FuzzyFunction& f) {
  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return f[a] > f[b]; });
  return order;
}

/// Calls visit(v, ν({f >= v})) for each distinct positive value v of f, in
/// decreasing order of v.
template <class Visit>
void for_each_level(const Capacity& nu, const FuzzyFunction& f, Visit&& visit) {
  const auto order = descending_order(f);
  Subset level;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const double v = f[order[k]];
    if (v <= 0.0) break;
    level = level.with(order[k]);
    if (k + 1 < order.size() && f[order[k + 1]] == v) continue;
    visit(v, nu.value(level));
  }
}

double go_unchecked(const Capacity& nu, const FuzzyFunction& f, const BinaryOperator& overlap,
                    const GpgFunctional& g, int kernel_resolution) {
  return apply_gpg(g, build_level_profile(nu, f, overlap), kernel_resolution).value;
}

double t_normed_unchecked(const Capacity& nu, const FuzzyFunction& f, const BinaryOperator& star) {
  double best = 0.0;
  for_each_level(nu, f, [&](double v, double c) { best = std::max(best, star(c, v)); });
  return best;
}

}  // namespace

double sugeno_integral(const Capacity& nu, const FuzzyFunction& f) {
  require_shared_space(nu, f);
  double best = 0.0;
  for_each_level(nu, f, [&](double v, double c) { best = std::max(best, std::min(v, c)); });
  return best;
}

double t_normed_integral(const Capacity& nu, const FuzzyFunction& f, const BinaryOperator& star) {
  require_shared_space(nu, f);
  if (!star.certified_t_norm() &&
      !(star.family() == BinaryOperator::Family::Custom && check_t_norm(star).passed())) {
    throw ConfigurationError("operator '" + star.describe() + "' is not a t-norm");
  }
  return t_normed_unchecked(nu, f, star);
}

double go_integral(const Capacity& nu, const FuzzyFunction& f, const BinaryOperator& overlap,
                   const GpgFunctional& g, int kernel_resolution) {
  require_shared_space(nu, f);
  if (!overlap.certified_t_overlap() &&
      !(overlap.family() == BinaryOperator::Family::Custom && check_t_overlap(overlap).passed())) {
    throw ConfigurationError("operator '" + overlap.describe() + "' is not a t-overlap function");
  }
  return go_unchecked(nu, f, overlap, g, kernel_resolution);
}

double choquet_integral(const Capacity& nu, const FuzzyFunction& f) {
  require_shared_space(nu, f);
  std::vector<std::pair<double, double>> levels;  // (v, ν({f >= v})), decreasing v
  for_each_level(nu, f, [&](double v, double c) { levels.emplace_back(v, c); });
  double sum = 0.0;
  double prev = 0.0;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    sum += (it->first - prev) * it->second;
    prev = it->first;
  }
  return sum;
}

double discrete_go_aggregate(const Capacity& nu, const FuzzyFunction& f, const BinaryOperator& overlap,
                             const DiscreteGpg& gn) {
  require_shared_space(nu, f);
  const LevelProfile m = build_level_profile(nu, f, overlap);
  if (m.empty()) return 0.0;
  std::vector<double> peaks(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) peaks[i] = m.peak(i);
  return gn(peaks);
}

// -- IntegralConfig -------------------------------------------------------------

IntegralConfig IntegralConfig::sugeno() { return {Kind::Sugeno, BinaryOperator::min(), std::nullopt}; }

IntegralConfig IntegralConfig::choquet() { return {Kind::Choquet, std::nullopt, std::nullopt}; }

IntegralConfig IntegralConfig::t_normed(BinaryOperator star) {
  const AxiomReport report = check_t_norm(star);
  if (!report.passed()) {
    throw ConfigurationError("operator '" + star.describe() + "' fails the t-norm " +
                             report.counterexamples.front().axiom + " axiom");
  }
  return trusted_t_normed(std::move(star));
}

IntegralConfig IntegralConfig::go(BinaryOperator overlap, GpgFunctional g) {
  const AxiomReport report = check_t_overlap(overlap);
  if (!report.passed()) {
    throw ConfigurationError("operator '" + overlap.describe() + "' fails the t-overlap " +
                             report.counterexamples.front().axiom + " axiom");
  }
  return trusted_go(std::move(overlap), std::move(g));
}

IntegralConfig IntegralConfig::trusted_t_normed(BinaryOperator star) {
  return {Kind::TNormed, std::move(star), std::nullopt};
}

IntegralConfig IntegralConfig::trusted_go(BinaryOperator overlap, GpgFunctional g) {
  return {Kind::GO, std::move(overlap), std::move(g)};
}

IntegralConfig& IntegralConfig::set_kernel_resolution(int n) {
  if (n < 1) throw PreconditionError("kernel resolution must be positive");
  kernel_resolution_ = n;
  return *this;
}

double IntegralConfig::operator()(const Capacity& nu, const FuzzyFunction& f) const {
  require_shared_space(nu, f);
  switch (kind_) {
    case Kind::Sugeno: return sugeno_integral(nu, f);
    case Kind::Choquet: return choquet_integral(nu, f);
    case Kind::TNormed: return t_normed_unchecked(nu, f, *op_);
    case Kind::GO: return go_unchecked(nu, f, *op_, *gpg_, kernel_resolution_);
  }
  return 0.0;
}

std::string IntegralConfig::kind_name() const {
  switch (kind_) {
    case Kind::Sugeno: return "sugeno";
    case Kind::Choquet: return "choquet";
    case Kind::TNormed: return "t_normed";
    case Kind::GO: return "go";
  }
  return "unknown";
}

std::string IntegralConfig::operators() const {
  switch (kind_) {
    case Kind::Sugeno:
    case Kind::Choquet: return "";
    case Kind::TNormed: return "star=" + op_->describe();
    case Kind::GO: return "O=" + op_->describe() + ";G=" + gpg_->describe();
  }
  return "";
}

}  // namespace goint

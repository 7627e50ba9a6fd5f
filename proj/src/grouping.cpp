#include "goint/grouping.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "goint/errors.hpp"
#include "goint/sampling.hpp"
#include "witness_book.hpp"

namespace goint {

// -- LevelProfile --------------------------------------------------------------

LevelProfile::LevelProfile(BinaryOperator overlap, std::vector<Segment> segments)
    : overlap_(std::move(overlap)), segments_(std::move(segments)) {
  double prev = 0.0;
  for (const Segment& s : segments_) {
    if (!(s.breakpoint > prev && s.breakpoint <= 1.0)) {
      throw PreconditionError("profile breakpoints must be strictly increasing within (0, 1]");
    }
    if (!(s.capacity >= 0.0 && s.capacity <= 1.0)) {
      throw PreconditionError("profile capacities must lie in [0, 1]");
    }
    prev = s.breakpoint;
  }
}

double LevelProfile::operator()(double t) const {
  if (t <= 0.0) return overlap_(1.0, 0.0);
  auto it = std::lower_bound(segments_.begin(), segments_.end(), t,
                             [](const Segment& s, double v) { return s.breakpoint < v; });
  if (it == segments_.end()) return overlap_(0.0, t);
  return overlap_(it->capacity, t);
}

LevelProfile build_level_profile(const Capacity& nu, const FuzzyFunction& f, const BinaryOperator& overlap) {
  if (!(nu.space() == f.space())) throw PreconditionError("capacity and function live on different spaces");
  std::vector<double> levels;
  levels.reserve(f.size());
  for (double v : f.values()) {
    if (v > 0.0) levels.push_back(v);
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<Segment> segments;
  segments.reserve(levels.size());
  for (double w : levels) segments.push_back({w, nu.value(level_set(f, w))});
  return LevelProfile(overlap, std::move(segments));
}

double eval_profile(const LevelProfile& m, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw PreconditionError("profile argument must lie in [0, 1]");
  return m(t);
}

// -- Kernel --------------------------------------------------------------------

Kernel Kernel::tilt(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw ConfigurationError("tilt kernel requires beta >= 0");
  Kernel k(Family::Tilt);
  k.beta_ = beta;
  return k;
}

Kernel Kernel::from_distortion(Distortion h) {
  Kernel k(Family::Distortion);
  k.distortion_ = std::move(h);
  return k;
}

Kernel Kernel::custom(std::string name, std::function<double(double, double)> fn) {
  Kernel k(Family::Custom);
  k.name_ = std::move(name);
  k.fn_ = std::move(fn);
  return k;
}

double Kernel::operator()(double t, double a) const {
  switch (family_) {
    case Family::Tilt: return std::pow(a, 1.0 + beta_ * t);
    case Family::Distortion: return (*distortion_)(a);
    case Family::Custom: return fn_(t, a);
  }
  return 0.0;
}

std::string Kernel::describe() const {
  std::ostringstream os;
  switch (family_) {
    case Family::Tilt: os << "tilt:beta=" << beta_; break;
    case Family::Distortion: os << "distortion:" << distortion_->describe(); break;
    case Family::Custom: os << "custom:" << name_; break;
  }
  return os.str();
}

// -- GpgFunctional -------------------------------------------------------------

GpgFunctional GpgFunctional::max() { return GpgFunctional(Variant::Max); }

GpgFunctional GpgFunctional::distorted(Distortion h) {
  if (std::string problem = h.validate(); !problem.empty()) throw ConfigurationError("distortion: " + problem);
  GpgFunctional g(Variant::Distorted);
  g.distortion_ = std::move(h);
  return g;
}

GpgFunctional GpgFunctional::kernel(Kernel k) {
  GpgFunctional g(Variant::Kernel);
  g.kernel_ = std::move(k);
  return g;
}

GpgFunctional GpgFunctional::custom(std::string name, std::function<double(const LevelProfile&)> fn) {
  GpgFunctional g(Variant::Custom);
  g.name_ = std::move(name);
  g.custom_ = std::move(fn);
  return g;
}

std::string GpgFunctional::describe() const {
  switch (variant_) {
    case Variant::Max: return "max";
    case Variant::Distorted: return "distorted:" + distortion_->describe();
    case Variant::Kernel: return "kernel:" + kernel_->describe();
    case Variant::Custom: return "custom:" + name_;
  }
  return "unknown";
}

namespace {

double profile_max(const LevelProfile& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) best = std::max(best, m.peak(i));
  return best;
}

double kernel_sup(const Kernel& g, const LevelProfile& m, int resolution) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double a = m.segment_start(i);
    const double b = m.segments()[i].breakpoint;
    const double c = m.segments()[i].capacity;
    const auto points = static_cast<std::size_t>(std::ceil(resolution * (b - a))) + 2;
    for (std::size_t j = 0; j < points; ++j) {
      const double t = j + 1 == points ? b : a + (b - a) * static_cast<double>(j) / static_cast<double>(points - 1);
      best = std::max(best, g(t, m.overlap()(c, t)));
    }
  }
  return best;
}

}  // namespace

GpgValue apply_gpg(const GpgFunctional& g, const LevelProfile& m, int kernel_resolution) {
  switch (g.variant()) {
    case GpgFunctional::Variant::Max:
      return {profile_max(m), std::nullopt};
    case GpgFunctional::Variant::Distorted:
      return {(*g.distortion())(profile_max(m)), std::nullopt};
    case GpgFunctional::Variant::Kernel:
      if (kernel_resolution < 1) throw PreconditionError("kernel resolution must be positive");
      return {kernel_sup(*g.kernel(), m, kernel_resolution), kernel_resolution};
    case GpgFunctional::Variant::Custom:
      return {g.custom_fn()(m), std::nullopt};
  }
  return {0.0, std::nullopt};
}

// -- DiscreteGpg ---------------------------------------------------------------

DiscreteGpg DiscreteGpg::parse(std::string_view name) {
  if (name == "max_n" || name == "max") return DiscreteGpg(Family::MaxN);
  if (name == "prob_sum") return DiscreteGpg(Family::ProbSum);
  if (name == "mean_n" || name == "mean") return DiscreteGpg(Family::MeanN);
  throw ConfigurationError("unknown discrete grouping family '" + std::string(name) + "'");
}

double DiscreteGpg::operator()(std::span<const double> x) const {
  if (x.empty()) return 0.0;
  switch (family_) {
    case Family::MaxN:
      return *std::max_element(x.begin(), x.end());
    case Family::ProbSum: {
      double keep = 1.0;
      for (double v : x) keep *= 1.0 - v;
      return 1.0 - keep;
    }
    case Family::MeanN: {
      double sum = 0.0;
      for (double v : x) sum += v;
      return sum / static_cast<double>(x.size());
    }
  }
  return 0.0;
}

std::string DiscreteGpg::describe() const {
  switch (family_) {
    case Family::MaxN: return "max_n";
    case Family::ProbSum: return "prob_sum";
    case Family::MeanN: return "mean_n";
  }
  return "unknown";
}

namespace {

void check_tuple(const DiscreteGpg& g, std::vector<double>& x, double step, detail::WitnessBook& book) {
  const double v = g(x);
  if (std::find(x.begin(), x.end(), 1.0) != x.end() && std::abs(v - 1.0) > kAxiomTolerance) {
    book.offer({"one-coordinate", x, {v}, std::abs(v - 1.0)});
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] >= 1.0) continue;
    const double keep = x[i];
    x[i] = std::min(1.0, keep + step);
    const double raised = g(x);
    std::vector<double> witness = x;
    witness[i] = keep;
    witness.insert(witness.end(), x.begin(), x.end());
    x[i] = keep;
    if (v > raised + kAxiomTolerance) book.offer({"monotonicity", std::move(witness), {v, raised}, v - raised});
  }
}

}  // namespace

AxiomReport check_gpg_discrete(const DiscreteGpg& g, int arity, int grid_n, std::uint64_t seed) {
  if (arity < 1) throw PreconditionError("arity must be at least 1");
  if (grid_n < 1) throw PreconditionError("grid resolution must be positive");
  AxiomReport report{"general-pseudo-grouping", g.describe() + "/n=" + std::to_string(arity), grid_n, {}, {}};
  detail::WitnessBook book;

  std::vector<double> x(static_cast<std::size_t>(arity), 0.0);
  if (const double v = g(x); v != 0.0) book.offer({"zero", x, {v}, std::abs(v)});

  const double step = 1.0 / grid_n;
  if (arity <= 4) {
    std::vector<int> idx(static_cast<std::size_t>(arity), 0);
    while (true) {
      for (std::size_t i = 0; i < idx.size(); ++i) x[i] = static_cast<double>(idx[i]) / grid_n;
      check_tuple(g, x, step, book);
      // First coordinate varies fastest.
      std::size_t d = 0;
      while (d < idx.size() && ++idx[d] > grid_n) idx[d++] = 0;
      if (d == idx.size()) break;
    }
  } else {
    Rng rng(seed);
    for (std::size_t trial = 0; trial < kDiscreteSampleCount; ++trial) {
      for (auto& v : x) v = rng.uniform();
      if (rng.chance(0.5)) x[rng.index(0, x.size() - 1)] = 1.0;
      check_tuple(g, x, rng.uniform(0.0, 0.5), book);
    }
    report.notes.push_back("arity above 4: sampled " + std::to_string(kDiscreteSampleCount) +
                           " random tuples with seed " + std::to_string(seed));
  }
  report.counterexamples = book.take();
  return report;
}

namespace {

std::vector<double> flatten(const LevelProfile& m) {
  std::vector<double> out;
  for (const Segment& s : m.segments()) {
    out.push_back(s.breakpoint);
    out.push_back(s.capacity);
  }
  return out;
}

std::string kernel_admissibility(const Kernel& k) {
  for (int i = 0; i <= 100; ++i) {
    const double t = i / 100.0;
    if (k(t, 0.0) != 0.0) return "g(t,0) must be 0";
    if (std::abs(k(t, 1.0) - 1.0) > kAxiomTolerance) return "g(t,1) must be 1";
    double prev = 0.0;
    for (int j = 1; j <= 100; ++j) {
      const double v = k(t, j / 100.0);
      if (v < prev - kAxiomTolerance) return "g(t,.) must be nondecreasing";
      prev = v;
    }
  }
  return {};
}

}  // namespace

AxiomReport check_gpg_functional(const GpgFunctional& g, int trials, std::uint64_t seed, int kernel_resolution) {
  if (trials < 0) throw PreconditionError("trials must be nonnegative");
  AxiomReport report{"grouping-functional", g.describe(), 0, {}, {}};
  if (g.variant() == GpgFunctional::Variant::Kernel) report.grid = kernel_resolution;
  detail::WitnessBook book;

  const LevelProfile zero(BinaryOperator::min(), {});
  if (const double v = apply_gpg(g, zero, kernel_resolution).value; std::abs(v) > kAxiomTolerance) {
    book.offer({"zero-function", {}, {v}, std::abs(v)});
  }

  if (g.variant() == GpgFunctional::Variant::Kernel) {
    if (std::string problem = kernel_admissibility(*g.kernel()); !problem.empty()) {
      book.offer({"kernel-admissibility", {}, {}, 1.0});
      report.notes.push_back("kernel: " + problem);
    }
  }

  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(trial));
    const BinaryOperator overlap = random_overlap(rng);

    // A profile touching 1: O(c,w)=1 forces c=w=1, so the last breakpoint is
    // 1 and every (nonincreasing) capacity is 1.
    const LevelProfile base = random_profile(overlap, rng);
    std::vector<Segment> top(base.segments().begin(), base.segments().end());
    top.back().breakpoint = 1.0;
    for (auto& s : top) s.capacity = 1.0;
    if (top.size() > 1 && top[top.size() - 2].breakpoint == 1.0) top.erase(top.end() - 2);
    const LevelProfile reaching(overlap, std::move(top));
    if (const double v = apply_gpg(g, reaching, kernel_resolution).value; std::abs(v - 1.0) > kAxiomTolerance) {
      book.offer({"attains-one", flatten(reaching), {v}, std::abs(v - 1.0)});
    }

    const LevelProfile lower = random_profile(overlap, rng);
    std::vector<Segment> raised(lower.segments().begin(), lower.segments().end());
    for (auto& s : raised) s.capacity = std::min(1.0, s.capacity + rng.uniform() * (1.0 - s.capacity));
    std::vector<double> caps;
    for (const auto& s : raised) caps.push_back(s.capacity);
    std::sort(caps.begin(), caps.end(), std::greater<>());
    for (std::size_t i = 0; i < raised.size(); ++i) raised[i].capacity = caps[i];
    const LevelProfile upper(overlap, std::move(raised));
    const double lo = apply_gpg(g, lower, kernel_resolution).value;
    const double hi = apply_gpg(g, upper, kernel_resolution).value;
    if (lo > hi + kAxiomTolerance) {
      std::vector<double> witness = flatten(lower);
      const auto up = flatten(upper);
      witness.insert(witness.end(), up.begin(), up.end());
      book.offer({"monotonicity", std::move(witness), {lo, hi}, lo - hi});
    }
  }

  report.counterexamples = book.take();
  report.notes.push_back("trials=" + std::to_string(trials) + " seed=" + std::to_string(seed));
  report.notes.push_back("continuity in the hypograph (Vietoris) topology is not checked");
  return report;
}

}  // namespace goint

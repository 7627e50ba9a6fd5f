#include "goint/overlap_ops.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "goint/errors.hpp"
#include "witness_book.hpp"

namespace goint {

namespace {

using detail::WitnessBook;

double grid_point(int i, int n) { return static_cast<double>(i) / static_cast<double>(n); }

void check_axis_monotonicity(const BinaryOperator& op, int n, WitnessBook& book) {
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const double l = grid_point(i, n);
      const double s = grid_point(j, n);
      const double here = op(l, s);
      if (i < n) {
        const double l2 = grid_point(i + 1, n);
        const double next = op(l2, s);
        if (here > next + kAxiomTolerance) book.offer({"monotonicity", {l, s, l2, s}, {here, next}, here - next});
      }
      if (j < n) {
        const double s2 = grid_point(j + 1, n);
        const double next = op(l, s2);
        if (here > next + kAxiomTolerance) book.offer({"monotonicity", {l, s, l, s2}, {here, next}, here - next});
      }
    }
  }
}

void check_symmetry(const BinaryOperator& op, int n, const char* axiom, WitnessBook& book) {
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const double l = grid_point(i, n);
      const double s = grid_point(j, n);
      const double a = op(l, s);
      const double b = op(s, l);
      const double gap = std::abs(a - b);
      if (gap > kAxiomTolerance) book.offer({axiom, {l, s}, {a, b}, gap});
    }
  }
}

}  // namespace

// -- BinaryOperator -------------------------------------------------------------

BinaryOperator BinaryOperator::min() { return {Family::Min, 1.0}; }
BinaryOperator BinaryOperator::product() { return {Family::Product, 1.0}; }
BinaryOperator BinaryOperator::lukasiewicz() { return {Family::Lukasiewicz, 1.0}; }
BinaryOperator BinaryOperator::mean() { return {Family::Mean, 1.0}; }
BinaryOperator BinaryOperator::asym_test() { return {Family::AsymTest, 1.0}; }

BinaryOperator BinaryOperator::power_product(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw ConfigurationError("power_product requires p > 0");
  return {Family::PowerProduct, p};
}

BinaryOperator BinaryOperator::min_power(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw ConfigurationError("min_power requires p > 0");
  return {Family::MinPower, p};
}

BinaryOperator BinaryOperator::custom(std::string name, std::function<double(double, double)> fn) {
  BinaryOperator op(Family::Custom, 1.0);
  op.custom_name_ = std::move(name);
  op.custom_ = std::move(fn);
  return op;
}

double BinaryOperator::operator()(double l, double s) const {
  switch (family_) {
    case Family::Min: return std::min(l, s);
    case Family::Product: return l * s;
    case Family::Lukasiewicz: return std::max(0.0, l + s - 1.0);
    case Family::PowerProduct: return std::pow(l * s, exponent_);
    case Family::MinPower: return std::pow(std::min(l, s), exponent_);
    case Family::Mean: return 0.5 * (l + s);
    case Family::AsymTest: return l * s * s;
    case Family::Custom: return custom_(l, s);
  }
  return 0.0;
}

std::string BinaryOperator::describe() const {
  std::ostringstream os;
  switch (family_) {
    case Family::Min: return "min";
    case Family::Product: return "product";
    case Family::Lukasiewicz: return "lukasiewicz";
    case Family::Mean: return "mean";
    case Family::AsymTest: return "asym_test";
    case Family::Custom: return "custom:" + custom_name_;
    case Family::PowerProduct: os << "power_product:p=" << exponent_; break;
    case Family::MinPower: os << "min_power:p=" << exponent_; break;
  }
  return os.str();
}

bool BinaryOperator::certified_t_overlap() const noexcept {
  switch (family_) {
    case Family::Min:
    case Family::Product:
    case Family::Lukasiewicz:
    case Family::PowerProduct:
    case Family::MinPower:
      return true;
    default:
      return false;
  }
}

bool BinaryOperator::certified_t_norm() const noexcept {
  switch (family_) {
    case Family::Min:
    case Family::Product:
    case Family::Lukasiewicz:
      return true;
    case Family::PowerProduct:
    case Family::MinPower:
      return exponent_ == 1.0;
    default:
      return false;
  }
}

double eval_binary(const BinaryOperator& op, double l, double s) {
  if (!(l >= 0.0 && l <= 1.0 && s >= 0.0 && s <= 1.0)) {
    throw PreconditionError("binary operator arguments must lie in [0, 1]");
  }
  return op(l, s);
}

BinaryOperator make_operator(std::string_view name, std::optional<double> p) {
  static const std::map<std::string_view, BinaryOperator::Family, std::less<>> families = {
      {"min", BinaryOperator::Family::Min},
      {"product", BinaryOperator::Family::Product},
      {"lukasiewicz", BinaryOperator::Family::Lukasiewicz},
      {"power_product", BinaryOperator::Family::PowerProduct},
      {"min_power", BinaryOperator::Family::MinPower},
      {"mean", BinaryOperator::Family::Mean},
      {"asym_test", BinaryOperator::Family::AsymTest},
  };
  auto it = families.find(name);
  if (it == families.end()) throw ConfigurationError("unknown operator family '" + std::string(name) + "'");
  switch (it->second) {
    case BinaryOperator::Family::PowerProduct:
      if (!p) throw ConfigurationError("power_product requires parameter p");
      return BinaryOperator::power_product(*p);
    case BinaryOperator::Family::MinPower:
      if (!p) throw ConfigurationError("min_power requires parameter p");
      return BinaryOperator::min_power(*p);
    default:
      if (p) throw ConfigurationError("operator '" + std::string(name) + "' takes no parameter");
      break;
  }
  switch (it->second) {
    case BinaryOperator::Family::Min: return BinaryOperator::min();
    case BinaryOperator::Family::Product: return BinaryOperator::product();
    case BinaryOperator::Family::Lukasiewicz: return BinaryOperator::lukasiewicz();
    case BinaryOperator::Family::Mean: return BinaryOperator::mean();
    default: return BinaryOperator::asym_test();
  }
}

BinaryOperator parse_operator(std::string_view descriptor) {
  const auto colon = descriptor.find(':');
  if (colon == std::string_view::npos) return make_operator(descriptor);
  const std::string_view name = descriptor.substr(0, colon);
  std::string_view param = descriptor.substr(colon + 1);
  if (!param.starts_with("p=")) {
    throw ConfigurationError("malformed operator descriptor '" + std::string(descriptor) + "'");
  }
  param.remove_prefix(2);
  double p = 0.0;
  auto [ptr, ec] = std::from_chars(param.data(), param.data() + param.size(), p);
  if (ec != std::errc{} || ptr != param.data() + param.size()) {
    throw ConfigurationError("malformed operator parameter in '" + std::string(descriptor) + "'");
  }
  return make_operator(name, p);
}

// -- axiom checks ---------------------------------------------------------------

const Counterexample* AxiomReport::find(std::string_view axiom) const {
  for (const auto& cx : counterexamples) {
    if (cx.axiom == axiom) return &cx;
  }
  return nullptr;
}

AxiomReport check_t_overlap(const BinaryOperator& op, int grid_n) {
  if (grid_n < 2) throw PreconditionError("grid resolution must be at least 2");
  AxiomReport report{"t-overlap", op.describe(), grid_n, {}, {}};
  WitnessBook book;

  check_symmetry(op, grid_n, "symmetry", book);

  bool strict_zero = true;
  for (int i = 0; i <= grid_n; ++i) {
    for (int j = 0; j <= grid_n; ++j) {
      const double l = grid_point(i, grid_n);
      const double s = grid_point(j, grid_n);
      const double v = op(l, s);
      if (l * s == 0.0) {
        if (v != 0.0) {
          book.offer({"boundary-zero", {l, s}, {v}, std::abs(v)});
          strict_zero = false;
        }
      } else {
        if (v == 0.0) strict_zero = false;
        if (l * s < 1.0 && !(v < 1.0)) book.offer({"boundary-one", {l, s}, {v}, v - 1.0 + kAxiomTolerance});
      }
    }
  }
  if (const double top = op(1.0, 1.0); top != 1.0) {
    book.offer({"boundary-one", {1.0, 1.0}, {top}, std::abs(1.0 - top)});
  }

  check_axis_monotonicity(op, grid_n, book);

  report.counterexamples = book.take();
  report.notes.push_back("grid check only; the continuum biconditional O(l,s)=1 iff ls=1 is not certified");
  report.notes.push_back(strict_zero ? "strict overlap zero condition (O=0 iff ls=0) holds on the grid"
                                     : "strict overlap zero condition (O=0 iff ls=0) fails on the grid");
  return report;
}

AxiomReport check_t_norm(const BinaryOperator& op, int grid_n) {
  if (grid_n < 2) throw PreconditionError("grid resolution must be at least 2");
  AxiomReport report{"t-norm", op.describe(), grid_n, {}, {}};
  WitnessBook book;

  check_symmetry(op, grid_n, "commutativity", book);
  check_axis_monotonicity(op, grid_n, book);

  for (int j = 0; j <= grid_n; ++j) {
    const double s = grid_point(j, grid_n);
    const double v = op(s, 1.0);
    const double gap = std::abs(v - s);
    if (gap > kAxiomTolerance) book.offer({"unit", {s, 1.0}, {v, s}, gap});
  }

  const int assoc_n = std::min(grid_n, kAssociativityGridCap);
  for (int i = 0; i <= assoc_n; ++i) {
    for (int j = 0; j <= assoc_n; ++j) {
      for (int k = 0; k <= assoc_n; ++k) {
        const double a = grid_point(i, assoc_n);
        const double b = grid_point(j, assoc_n);
        const double c = grid_point(k, assoc_n);
        const double left = op(op(a, b), c);
        const double right = op(a, op(b, c));
        const double gap = std::abs(left - right);
        if (gap > kAxiomTolerance) book.offer({"associativity", {a, b, c}, {left, right}, gap});
      }
    }
  }

  report.counterexamples = book.take();
  if (assoc_n != grid_n) {
    report.notes.push_back("associativity checked on a " + std::to_string(assoc_n + 1) + "^3 grid");
  }
  return report;
}

bool replays(const BinaryOperator& op, const Counterexample& cx) {
  const auto& in = cx.inputs;
  const std::string& axiom = cx.axiom;
  if ((axiom == "symmetry" || axiom == "commutativity") && in.size() == 2) {
    return std::abs(op(in[0], in[1]) - op(in[1], in[0])) > kAxiomTolerance;
  }
  if (axiom == "boundary-zero" && in.size() == 2) {
    return in[0] * in[1] == 0.0 && op(in[0], in[1]) != 0.0;
  }
  if (axiom == "boundary-one" && in.size() == 2) {
    const double v = op(in[0], in[1]);
    return in[0] * in[1] == 1.0 ? v != 1.0 : !(v < 1.0);
  }
  if (axiom == "monotonicity" && in.size() == 4) {
    return op(in[0], in[1]) > op(in[2], in[3]) + kAxiomTolerance;
  }
  if (axiom == "unit" && in.size() == 2) {
    return std::abs(op(in[0], 1.0) - in[0]) > kAxiomTolerance;
  }
  if (axiom == "associativity" && in.size() == 3) {
    return std::abs(op(op(in[0], in[1]), in[2]) - op(in[0], op(in[1], in[2]))) > kAxiomTolerance;
  }
  return false;
}

}  // namespace goint

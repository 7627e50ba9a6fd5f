#pragma once

#include <algorithm>
#include <vector>

#include "goint/overlap_ops.hpp"

namespace goint::detail {

/// Keeps the most severe counterexample per axiom, in first-seen axiom order.
class WitnessBook {
 public:
  void offer(Counterexample cx) {
    auto it = std::find_if(witnesses_.begin(), witnesses_.end(),
                           [&](const Counterexample& w) { return w.axiom == cx.axiom; });
    if (it == witnesses_.end()) {
      witnesses_.push_back(std::move(cx));
    } else if (cx.severity > it->severity) {
      *it = std::move(cx);
    }
  }
  std::vector<Counterexample> take() { return std::move(witnesses_); }

 private:
  std::vector<Counterexample> witnesses_;
};

}  // namespace goint::detail

#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "wfpt/weight.hpp"

namespace wfpt {

// A solution payload together with its weight recomputed from the instance.
template <typename Payload>
struct Solution {
  Payload payload;
  Weight weight;
};

// Nil is the empty optional.
template <typename Payload>
using SolveOutcome = std::optional<Solution<Payload>>;

enum class WeightSense { AtMost, AtLeast };

// A k-variant solver: given (instance, W, k) it returns a solution meeting the
// weight bound whenever one of size at most k exists, and otherwise returns
// Nil or some solution that still meets the weight bound.
template <typename Instance, typename Payload>
struct KVariantSolver {
  std::string problem;
  WeightSense sense = WeightSense::AtMost;
  std::function<std::optional<Payload>(const Instance&, const Weight&, int)> solve;
  std::function<bool(const Instance&, const Payload&)> is_solution;
  std::function<Weight(const Instance&, const Payload&)> weight_of;
};

template <typename Payload>
struct DriverResult {
  SolveOutcome<Payload> outcome;
  int achieved_k = 0;  // k of the first non-Nil answer, or the last k tried
};

class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Runs k = 1, 2, ... up to min(floor(W), max_size) (at least once) and
// returns the first non-Nil answer. The weight is always recomputed from the
// instance; a payload that is not a solution or misses the bound throws.
template <typename Instance, typename Payload>
DriverResult<Payload> solve_weighted(const Instance& instance, const Weight& W,
                                     const KVariantSolver<Instance, Payload>& solver,
                                     long max_size) {
  long kmax = std::max(1L, std::min(W.floor(), max_size));
  DriverResult<Payload> result;
  for (long k = 1; k <= kmax; ++k) {
    result.achieved_k = static_cast<int>(k);
    auto payload = solver.solve(instance, W, static_cast<int>(k));
    if (!payload) continue;
    if (!solver.is_solution(instance, *payload))
      throw ContractViolation(solver.problem + ": solver returned a non-solution");
    Weight w = solver.weight_of(instance, *payload);
    bool ok = solver.sense == WeightSense::AtMost ? w <= W : w >= W;
    if (!ok) throw ContractViolation(solver.problem + ": solver broke the weight bound");
    result.outcome = Solution<Payload>{std::move(*payload), std::move(w)};
    return result;
  }
  return result;
}

}  // namespace wfpt

#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace wfpt {

// Search-tree accounting shared by the branching solvers.
struct SolveStats {
  std::uint64_t nodes = 0;
  std::map<std::string, std::uint64_t> rule_fires;
  std::uint64_t memo_hits = 0;
  // Branching performed by the catch-all rule because no listed rule matched.
  std::uint64_t fallback_branches = 0;
  // Cubic branching on v/N(v) that was not followed by a paying reduction
  // before the next such branching (or before a solution was emitted).
  std::uint64_t cubic_debt_violations = 0;

  void fire(const std::string& rule) { ++rule_fires[rule]; }
  void merge(const SolveStats& o) {
    nodes += o.nodes;
    memo_hits += o.memo_hits;
    fallback_branches += o.fallback_branches;
    cubic_debt_violations += o.cubic_debt_violations;
    for (const auto& [k, v] : o.rule_fires) rule_fires[k] += v;
  }
};

}  // namespace wfpt

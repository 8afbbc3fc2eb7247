#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "wfpt/graph.hpp"
#include "wfpt/weds.hpp"
#include "wfpt/wiob.hpp"

namespace wfpt {

// Exhaustive ground truth under joint (weight, size) bounds. For the
// maximisation problem "best" means heaviest and the bound is weight >= W.
template <typename Witness>
struct OracleReport {
  // Index s: best weight over solutions of size exactly s.
  std::vector<std::optional<Weight>> best_by_size;
  std::vector<std::optional<Witness>> witness_by_size;
  std::optional<Weight> best_weight;
  std::optional<Weight> best_weight_within_k;
  // Smallest size of a solution meeting the weight bound.
  std::optional<int> min_size_meeting_W;
  // A solution of size <= k meets the weight bound.
  bool feasible = false;
};

OracleReport<VertexSet> brute_min_wvc(const WeightedGraph& g, const Weight& W, int k);
OracleReport<VertexSet> brute_min_w3hs(const WeightedHypergraph& h, const Weight& W, int k);
OracleReport<EdgeSet> brute_min_weds(const EdgeWeightedGraph& g, const Weight& W, int k);

struct WiobReport : OracleReport<OutTree> {
  // Every (root, internal set) realised by some spanning out-branching.
  std::set<std::pair<VertexId, VertexSet>> realised;
};
WiobReport brute_max_wiob(const WeightedDigraph& g, const Weight& W, int k);

// Five-rule leaf and max-degree k-WVC solver used as a reference.
std::optional<VertexSet> baseline_alg3(const WeightedGraph& g, const Weight& W, int k);

}  // namespace wfpt

#pragma once

#include <map>
#include <optional>

#include "wfpt/graph.hpp"
#include "wfpt/stats.hpp"

namespace wfpt {

struct WvcOptions {
  // Components up to this many vertices are solved exactly in one step.
  int brute_force_threshold = 100;
  SolveStats* stats = nullptr;
};

// k-WVC search: a cover of weight <= W whenever one of size <= k exists,
// otherwise Nil or some cover of weight <= W.
std::optional<VertexSet> solve_k_wvc(const WeightedGraph& g, const Weight& W, int k,
                                     const WvcOptions& opts = {});

// k-WVC without a weight bound: a cover whose weight is at most that of every
// cover of size <= k. Never Nil.
VertexSet solve_k_wvcnow(const WeightedGraph& g, int k, const WvcOptions& opts = {});

struct MemoOptions {
  bool use_memo = true;
  int small_component = 10;
  int brute_force_threshold = 100;
  SolveStats* stats = nullptr;
};

// Stored-solution variant. Nil only when no cover of size <= k exists.
std::optional<VertexSet> solve_k_wvcnow_memo(const WeightedGraph& g, int k,
                                             const MemoOptions& opts = {});

// Triangle of G[U] mapped to a two-vertex component of G[U].
using TriangleMap = std::map<VertexSet, VertexSet>;

struct GoodMvc {
  VertexSet cover;
  TriangleMap f;
};

// Triangle components of G[U] whose vertices share no neighbour outside U.
std::vector<VertexSet> isolated_triangles(const WeightedGraph& g, const VertexSet& u);
// Two-vertex components of G[U].
std::vector<VertexSet> p2_components(const WeightedGraph& g, const VertexSet& u);
// Assigns to each isolated triangle a two-vertex component that has a witness
// outside U adjacent to one triangle vertex and to both path vertices. Nil if
// some triangle has no such partner.
std::optional<TriangleMap> good_function(const WeightedGraph& g, const VertexSet& u);
// Swaps cover vertices until the cover becomes good. Needs max degree <= 3
// and a minimum vertex cover.
GoodMvc preprocess_good_mvc(const WeightedGraph& g, const VertexSet& mvc);

// WVC parameterized by the size of a given minimum vertex cover.
std::optional<VertexSet> solve_wvc_star(const WeightedGraph& g, const Weight& W,
                                        const VertexSet& mvc, SolveStats* stats = nullptr);

// Exact minimum-weight cover of a bipartite graph via max-flow/min-cut.
VertexSet bipartite_min_weight_vc(const WeightedGraph& g);
// Exact minimum-cardinality vertex cover.
VertexSet min_unweighted_vc(const WeightedGraph& g);
// Exact minimum-weight cover; Nil when its weight would exceed `bound`.
std::optional<VertexSet> exact_min_weight_vc(const WeightedGraph& g,
                                             const std::optional<Weight>& bound = std::nullopt);
// Exact minimum-weight cover for graphs in which every component has at most
// one vertex of degree >= 3. Throws otherwise.
VertexSet min_weight_vc_low_degree(const WeightedGraph& g);

}  // namespace wfpt

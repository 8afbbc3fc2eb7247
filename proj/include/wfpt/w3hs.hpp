#pragma once

#include <functional>
#include <optional>

#include "wfpt/graph.hpp"
#include "wfpt/stats.hpp"

namespace wfpt {

// k-W3HS search: a hitting set of weight <= W whenever one of size <= k
// exists, otherwise Nil or some hitting set of weight <= W.
std::optional<VertexSet> solve_k_w3hs(const WeightedHypergraph& h, const Weight& W, int k,
                                      SolveStats* stats = nullptr);

// Exact minimum-weight hitting set when every vertex lies in at most two
// edges, via edge cover on the dual multigraph. Throws on higher degrees.
VertexSet deg2_hypergraph_min_whs(const WeightedHypergraph& h);

// Exact minimum-cardinality hitting set.
VertexSet min_unweighted_3hs(const WeightedHypergraph& h);

using WvcKSolver = std::function<std::optional<VertexSet>(const WeightedGraph&, const Weight&, int)>;

// Enumerates the part of a small hitting set U that stays chosen; the
// remainder reduces to vertex cover, handed to `wvc`.
std::optional<VertexSet> solve_w3hs_star(const WeightedHypergraph& h, const Weight& W, int k,
                                         const WvcKSolver& wvc);

}  // namespace wfpt

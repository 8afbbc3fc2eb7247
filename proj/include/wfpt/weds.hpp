#pragma once

#include <map>
#include <optional>
#include <vector>

#include "wfpt/graph.hpp"
#include "wfpt/stats.hpp"

namespace wfpt {

// Simple undirected graph with weights on edges, stored on (min, max) pairs.
class EdgeWeightedGraph {
 public:
  EdgeWeightedGraph() = default;
  explicit EdgeWeightedGraph(int n) : adj_(n) {}

  // Throws on self-loops, out-of-range endpoints or duplicates.
  void add_edge(VertexId u, VertexId v, const Weight& w);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return static_cast<int>(weight_.size()); }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
  bool adjacent(VertexId u, VertexId v) const;
  const Weight& weight(VertexId u, VertexId v) const;
  // Ascending canonical edges.
  std::vector<Edge> edges() const;
  Weight total_weight(const std::vector<Edge>& es) const;
  // Structure only, all vertex weights 1.
  WeightedGraph skeleton() const;

  friend bool operator==(const EdgeWeightedGraph&, const EdgeWeightedGraph&) = default;

 private:
  std::vector<std::vector<VertexId>> adj_;
  std::map<Edge, Weight> weight_;
};

using EdgeSet = std::vector<Edge>;  // sorted canonical edges

Edge canonical(VertexId u, VertexId v);
// Endpoints of the edges, V(U).
VertexSet endpoints(const EdgeSet& es);
bool is_edge_dominating_set(const EdgeWeightedGraph& g, const EdgeSet& es);
// V(U) of an edge dominating set U is a vertex cover.
bool endpoints_form_vertex_cover(const EdgeWeightedGraph& g, const EdgeSet& es);

struct VcRepresentation {
  std::vector<VertexSet> family;
  int budget = 0;
};

// Branches v / N(v) until every residual component is a clique on at most
// three vertices; sets larger than the budget are pruned.
VcRepresentation enumerate_good_rep(const EdgeWeightedGraph& g, int budget, SolveStats* stats = nullptr);

// Lightest edge dominating set U with a inside V(U), or Nil if none exists.
// Requires every component of G - a to be a clique on at most three vertices.
std::optional<EdgeSet> complete_eds(const EdgeWeightedGraph& g, const VertexSet& a);

std::optional<EdgeSet> solve_k_weds(const EdgeWeightedGraph& g, const Weight& W, int k,
                                    SolveStats* stats = nullptr);

// Candidate vertex sets derived from an edge dominating set u; the family
// contains every minimal vertex cover. Throws if u does not dominate.
std::vector<VertexSet> weds_star_supersets(const EdgeWeightedGraph& g, const EdgeSet& u);

EdgeSet min_unweighted_eds(const EdgeWeightedGraph& g);

std::optional<EdgeSet> solve_weds_by_t(const EdgeWeightedGraph& g, const Weight& W);

}  // namespace wfpt

#pragma once

#include <functional>
#include <map>
#include <optional>

#include "wfpt/framework.hpp"
#include "wfpt/graph.hpp"
#include "wfpt/stats.hpp"

namespace wfpt {

// Rooted out-tree stored as child -> parent over the non-root vertices.
struct OutTree {
  VertexId root = -1;
  std::map<VertexId, VertexId> parent;

  VertexSet vertices() const;
  // Vertices with at least one child.
  VertexSet internal() const;
  VertexSet leaves() const;
  friend bool operator==(const OutTree&, const OutTree&) = default;
};

bool is_out_tree(const WeightedDigraph& g, const OutTree& t);
bool is_out_branching(const WeightedDigraph& g, const OutTree& t);

// Every vertex is reachable from r.
bool has_outbranching(const WeightedDigraph& g, VertexId r);

// Out-tree rooted at r with exactly k internal vertices, at most k leaves and
// internal weight at least W, or Nil.
using ITreeEngine = std::function<std::optional<OutTree>(const WeightedDigraph&, VertexId, const Weight&, int)>;

// Exact memoised extension search over subtrees with at most 2k vertices.
std::optional<OutTree> weighted_k_itree(const WeightedDigraph& g, VertexId r, const Weight& W, int k,
                                        SolveStats* stats = nullptr);

// Grows t into a spanning out-branching without removing any arc of t.
OutTree extend_to_outbranching(const WeightedDigraph& g, const OutTree& t);

std::optional<OutTree> solve_k_wiob(const WeightedDigraph& g, const Weight& W, int k,
                                    const ITreeEngine& engine = {});

// Some spanning out-branching has at least c internal vertices.
bool max_internal_at_least(const WeightedDigraph& g, int c, const ITreeEngine& engine = {});

// Increments k while a larger internal set is possible.
DriverResult<OutTree> solve_wiob_driver(const WeightedDigraph& g, const Weight& W,
                                        const ITreeEngine& engine = {});

}  // namespace wfpt

#pragma once

#include <stdexcept>
#include <vector>

#include "wfpt/weight.hpp"

namespace wfpt {

// Undirected weighted link between two nodes of a multigraph.
struct Link {
  int a;
  int b;
  Weight w;
};

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Minimum-weight set of links touching every required node (exact subset
// dynamic programming per connected component). Returns link indices in
// ascending order. Throws InfeasibleError if a required node has no link.
std::vector<int> min_weight_edge_cover(int num_nodes, const std::vector<Link>& links,
                                       const std::vector<int>& required);

}  // namespace wfpt

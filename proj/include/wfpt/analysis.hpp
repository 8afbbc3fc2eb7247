#pragma once

#include <vector>

#include "wfpt/graph.hpp"

namespace wfpt {

// Measure decreases of one branching rule, one entry per branch.
using BranchingVector = std::vector<double>;

// Unique positive root of x^{b*} = sum_i x^{b*-b_i} with b* = max b_i,
// accurate to `tol`. A single-branch vector yields 1. Throws on empty input
// or non-positive entries.
double branching_root(const BranchingVector& b, double tol = 1e-9);

// Coefficients of the hitting-set measure k - alpha + 1.
struct MeasureParams {
  double alpha4 = 0.87;  // at least four 2-edges
  double alpha3 = 0.8;   // three 2-edges without a common vertex
  double alpha2 = 0.55;  // at least two 2-edges otherwise
  double alpha1 = 0.35;  // exactly one 2-edge
};

// alpha(G) by 2-edge count and structure; 0 without 2-edges.
double alpha_value(const WeightedHypergraph& h, const MeasureParams& p = {});
// k - alpha(G) + 1.
double alpha_measure(const WeightedHypergraph& h, int k, const MeasureParams& p = {});

// |U| minus the number of singleton components of G[U].
int mc_measure(const WeightedGraph& g, const VertexSet& u);

}  // namespace wfpt

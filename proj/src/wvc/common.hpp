#pragma once

// Pattern searches shared by the vertex cover branching algorithms.

#include <optional>
#include <string>
#include <vector>

#include "wfpt/graph.hpp"
#include "wfpt/stats.hpp"

namespace wfpt::detail {

inline void fire(SolveStats* s, const std::string& rule) {
  if (s) s->fire(rule);
}

// One branch of a branching rule: cover `take`, spend `dec` of the budget.
struct Branch {
  VertexSet take;
  int dec;
};

inline Branch take_all(VertexSet x) {
  int d = static_cast<int>(x.size());
  return {std::move(x), d};
}

// Component with edges for which one of the exact steps applies.
struct EasyComponent {
  VertexSet vertices;
  bool low_degree;  // at most one vertex of degree >= 3
};

std::optional<EasyComponent> find_easy_component(const WeightedGraph& g, int threshold);

// Smallest-id leaf, or -1.
VertexId find_leaf(const WeightedGraph& g);

// Adjacent v, u with N(u)\{v} inside N(v) and w(v) <= w(u); returns v or -1.
VertexId find_dominating(const WeightedGraph& g);

// r of degree 2 whose neighbours are adjacent. Returns {r, v, u} with v < u.
std::optional<std::array<VertexId, 3>> find_thin_triangle(const WeightedGraph& g);

// Triangle of degree-3 vertices ordered by (weight, id): {v, u, r}.
std::optional<std::array<VertexId, 3>> find_cubic_triangle(const WeightedGraph& g);
// N(v) together with N(u') and N(r') for the outer neighbours u', r'.
VertexSet cubic_triangle_set(const WeightedGraph& g, const std::array<VertexId, 3>& t);

// |N(v)| = 3, N(u) = {v, r}, |N(r)| = 2. Returns {v, u, r}.
std::optional<std::array<VertexId, 3>> find_path_into_cubic(const WeightedGraph& g);

// x of degree 3 with a degree-2 neighbour a leading to v; b, c are the other
// neighbours of x in both orders.
struct Pattern {
  VertexId x, a, b, c, v;
};
std::vector<Pattern> find_patterns(const WeightedGraph& g);

// Generic exhaustive fallback: max-degree v versus N(v).
std::vector<Branch> fallback_branches(const WeightedGraph& g);

}  // namespace wfpt::detail

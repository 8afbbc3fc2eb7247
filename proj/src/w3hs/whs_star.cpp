#include <stdexcept>

#include "wfpt/w3hs.hpp"

namespace wfpt {

std::optional<VertexSet> solve_w3hs_star(const WeightedHypergraph& h, const Weight& W, int k,
                                         const WvcKSolver& wvc) {
  for (VertexId v : h.vertices())
    if (h.weight(v) < Weight(1)) throw std::invalid_argument("vertex weights must be at least 1");
  const VertexSet u = min_unweighted_3hs(h);
  if (u.size() > 24) throw std::invalid_argument("minimum hitting set too large to enumerate");
  const VertexSet all = h.vertices();
  for (unsigned long mask = 0; mask < (1UL << u.size()); ++mask) {
    VertexSet chosen, rest;
    for (std::size_t i = 0; i < u.size(); ++i) ((mask >> i) & 1 ? chosen : rest).push_back(u[i]);
    // Vertices that are the only way left to hit some edge.
    VertexSet s;
    bool dead = false;
    for (const auto& e : h.edges()) {
      VertexSet outside;
      for (VertexId x : e)
        if (!set_contains(rest, x)) outside.push_back(x);
      if (outside.empty()) dead = true;
      if (outside.size() == 1) s.push_back(outside[0]);
    }
    if (dead) continue;
    s = make_set(s);
    if (!set_intersection(s, rest).empty()) continue;
    VertexSet taken = set_union(chosen, s);
    Weight budget = W - h.total_weight(taken);
    if (budget.sign() < 0) continue;

    VertexSet keep = set_difference(set_difference(all, u), s);
    WeightedGraph residual(h.id_space());
    for (VertexId v : keep) residual.add_vertex(v, h.weight(v));
    for (const auto& e : h.edges()) {
      bool hit = false;
      for (VertexId x : e)
        if (set_contains(taken, x)) hit = true;
      if (hit) continue;
      VertexSet left;
      for (VertexId x : e)
        if (set_contains(keep, x)) left.push_back(x);
      // Unhit edges lose their vertices in U \ U' and keep exactly two.
      if (left.size() == 2) residual.add_edge(left[0], left[1]);
    }
    auto sub = wvc(residual, budget, k - static_cast<int>(taken.size()));
    if (sub) return set_union(taken, *sub);
  }
  return std::nullopt;
}

}  // namespace wfpt

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "wfpt/wvc.hpp"

namespace wfpt {

namespace {

// Min-weight cover of a path seq[0..L-1]; endpoints may be forced in.
std::optional<VertexSet> path_cover(const WeightedGraph& g, const std::vector<VertexId>& seq,
                                    bool force_first, bool force_last) {
  const std::size_t L = seq.size();
  if (L == 0) return VertexSet{};
  // out[i]/in[i]: best weight of seq[0..i] with seq[i] excluded/included.
  std::vector<std::optional<Weight>> out(L), in(L);
  std::vector<char> in_from_in(L, 0);
  if (!force_first) out[0] = Weight(0);
  in[0] = g.weight(seq[0]);
  for (std::size_t i = 1; i < L; ++i) {
    out[i] = in[i - 1];
    const auto& a = out[i - 1];
    const auto& b = in[i - 1];
    std::optional<Weight> best;
    if (a && (!b || *a <= *b)) {
      best = *a;
    } else if (b) {
      best = *b;
      in_from_in[i] = 1;
    }
    if (best) in[i] = *best + g.weight(seq[i]);
  }
  bool last_in;
  if (force_last || !out[L - 1]) {
    if (!in[L - 1]) return std::nullopt;
    last_in = true;
  } else {
    last_in = in[L - 1] && *in[L - 1] < *out[L - 1];
  }
  VertexSet cover;
  bool cur_in = last_in;
  for (std::size_t i = L; i-- > 0;) {
    if (cur_in) cover.push_back(seq[i]);
    if (i == 0) break;
    cur_in = cur_in ? static_cast<bool>(in_from_in[i]) : true;
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

// Exact cover for a graph of maximum degree <= 2.
VertexSet maxdeg2_cover(const WeightedGraph& g) {
  VertexSet cover;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() < 2) continue;
    VertexId start = -1;
    for (VertexId v : comp)
      if (g.degree(v) <= 1) {
        start = v;
        break;
      }
    bool cycle = start < 0;
    if (cycle) start = comp.front();
    std::vector<VertexId> seq{start};
    VertexId prev = -1, cur = start;
    while (true) {
      VertexId next = -1;
      for (VertexId u : g.neighbors(cur))
        if (u != prev) {
          next = u;
          break;
        }
      if (next < 0 || next == start) break;
      seq.push_back(next);
      prev = cur;
      cur = next;
    }
    VertexSet part;
    if (!cycle) {
      part = *path_cover(g, seq, false, false);
    } else {
      std::vector<VertexId> rest(seq.begin() + 1, seq.end());
      VertexSet with_start = *path_cover(g, rest, false, false);
      with_start.insert(with_start.begin(), start);
      Weight w1 = g.total_weight(with_start);
      auto without_start = path_cover(g, rest, true, true);
      if (without_start && g.total_weight(*without_start) < w1)
        part = *without_start;
      else
        part = with_start;
    }
    cover.insert(cover.end(), part.begin(), part.end());
  }
  return make_set(cover);
}

Weight packing_lower_bound(const WeightedGraph& g) {
  std::vector<Weight> residual(g.id_space());
  for (VertexId v : g.vertices()) residual[v] = g.weight(v);
  Weight lb;
  for (const auto& [u, v] : g.edges()) {
    Weight y = std::min(residual[u], residual[v]);
    if (y.sign() <= 0) continue;
    lb += y;
    residual[u] -= y;
    residual[v] -= y;
  }
  return lb;
}

class BranchAndBound {
 public:
  std::optional<VertexSet> solve(const WeightedGraph& g, const Weight& budget) {
    if (budget.sign() < 0) return std::nullopt;
    std::vector<VertexSet> comps;
    for (auto& c : connected_components(g))
      if (c.size() > 1) comps.push_back(std::move(c));
    if (comps.empty()) return VertexSet{};
    if (comps.size() == 1) return solve_connected(g, budget);
    std::vector<WeightedGraph> parts;
    std::vector<Weight> lbs;
    Weight lb_total;
    for (const auto& c : comps) {
      parts.push_back(induced_subgraph(g, c));
      lbs.push_back(packing_lower_bound(parts.back()));
      lb_total += lbs.back();
    }
    if (lb_total > budget) return std::nullopt;
    VertexSet cover;
    Weight used;
    Weight rest = lb_total;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      rest -= lbs[i];
      auto sub = solve_connected(parts[i], budget - used - rest);
      if (!sub) return std::nullopt;
      used += parts[i].total_weight(*sub);
      cover.insert(cover.end(), sub->begin(), sub->end());
    }
    return make_set(cover);
  }

 private:
  std::optional<VertexSet> take(const WeightedGraph& g, const VertexSet& x, const Weight& budget) {
    auto sub = solve(g.without(x), budget - g.total_weight(x));
    if (!sub) return std::nullopt;
    return set_union(*sub, x);
  }

  std::optional<VertexSet> solve_connected(const WeightedGraph& g, const Weight& budget) {
    if (budget.sign() < 0) return std::nullopt;
    const VertexSet vs = g.vertices();
    for (VertexId v : vs)
      if (g.weight(v).sign() <= 0 && g.degree(v) > 0) return take(g, {v}, budget);
    for (VertexId v : vs) {
      if (g.degree(v) != 1) continue;
      VertexId u = g.neighbors(v)[0];
      if (g.weight(v) >= g.weight(u)) return take(g, {u}, budget);
      WeightedGraph h = g.without({v});
      h.set_weight(u, g.weight(u) - g.weight(v));
      auto sub = solve(h, budget - g.weight(v));
      if (!sub) return std::nullopt;
      if (!set_contains(*sub, u)) return set_union(*sub, {v});
      return sub;
    }
    for (VertexId v : vs)
      for (VertexId u : g.neighbors(v)) {
        if (g.weight(v) > g.weight(u)) continue;
        bool dominated = true;
        for (VertexId x : g.neighbors(u))
          if (x != v && !g.adjacent(v, x)) {
            dominated = false;
            break;
          }
        if (dominated) return take(g, {v}, budget);
      }
    if (g.max_degree() <= 2) {
      VertexSet c = maxdeg2_cover(g);
      if (g.total_weight(c) > budget) return std::nullopt;
      return c;
    }
    if (packing_lower_bound(g) > budget) return std::nullopt;
    VertexId v = g.max_degree_vertex();
    auto a = take(g, {v}, budget);
    Weight b_budget = a ? g.total_weight(*a) : budget;
    auto b = take(g, g.neighbors(v), b_budget);
    if (b && (!a || g.total_weight(*b) < g.total_weight(*a))) return b;
    return a;
  }
};

}  // namespace

VertexSet min_weight_vc_low_degree(const WeightedGraph& g) {
  VertexSet cover;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() < 2) continue;
    VertexId hub = -1;
    int high = 0;
    for (VertexId v : comp)
      if (g.degree(v) >= 3) {
        ++high;
        hub = v;
      }
    if (high > 1) throw std::invalid_argument("component has two vertices of degree >= 3");
    WeightedGraph h = induced_subgraph(g, comp);
    VertexSet part;
    if (high == 0) {
      part = maxdeg2_cover(h);
    } else {
      VertexSet a = set_union(maxdeg2_cover(h.without({hub})), {hub});
      const VertexSet& nb = h.neighbors(hub);
      VertexSet b = set_union(maxdeg2_cover(h.without(nb)), nb);
      part = h.total_weight(b) < h.total_weight(a) ? b : a;
    }
    cover.insert(cover.end(), part.begin(), part.end());
  }
  return make_set(cover);
}

std::optional<VertexSet> exact_min_weight_vc(const WeightedGraph& g,
                                             const std::optional<Weight>& bound) {
  BranchAndBound bb;
  if (bound) return bb.solve(g, *bound);
  Weight all = g.total_weight(g.vertices());
  return bb.solve(g, all);
}

VertexSet min_unweighted_vc(const WeightedGraph& g) {
  WeightedGraph unit(g.id_space());
  for (VertexId v : g.vertices()) unit.add_vertex(v, Weight(1));
  for (const auto& [a, b] : g.edges()) unit.add_edge(a, b);
  return *exact_min_weight_vc(unit);
}

}  // namespace wfpt

#include "common.hpp"

#include <algorithm>

namespace wfpt::detail {

std::optional<EasyComponent> find_easy_component(const WeightedGraph& g, int threshold) {
  auto comps = connected_components(g);
  for (const auto& c : comps) {
    if (c.size() < 2) continue;
    int high = 0;
    for (VertexId v : c)
      if (g.degree(v) >= 3) ++high;
    if (high <= 1) return EasyComponent{c, true};
  }
  for (const auto& c : comps)
    if (c.size() >= 2 && static_cast<int>(c.size()) <= threshold) return EasyComponent{c, false};
  return std::nullopt;
}

VertexId find_leaf(const WeightedGraph& g) {
  for (VertexId v = 0; v < g.id_space(); ++v)
    if (g.contains(v) && g.degree(v) == 1) return v;
  return -1;
}

VertexId find_dominating(const WeightedGraph& g) {
  for (VertexId v = 0; v < g.id_space(); ++v) {
    if (!g.contains(v)) continue;
    for (VertexId u : g.neighbors(v)) {
      if (g.weight(v) > g.weight(u)) continue;
      bool inside = true;
      for (VertexId x : g.neighbors(u))
        if (x != v && !g.adjacent(v, x)) {
          inside = false;
          break;
        }
      if (inside) return v;
    }
  }
  return -1;
}

std::optional<std::array<VertexId, 3>> find_thin_triangle(const WeightedGraph& g) {
  for (VertexId r = 0; r < g.id_space(); ++r) {
    if (!g.contains(r) || g.degree(r) != 2) continue;
    VertexId v = g.neighbors(r)[0], u = g.neighbors(r)[1];
    if (g.adjacent(v, u)) return std::array<VertexId, 3>{r, v, u};
  }
  return std::nullopt;
}

std::optional<std::array<VertexId, 3>> find_cubic_triangle(const WeightedGraph& g) {
  for (VertexId a = 0; a < g.id_space(); ++a) {
    if (!g.contains(a) || g.degree(a) != 3) continue;
    for (VertexId b : g.neighbors(a)) {
      if (b <= a || g.degree(b) != 3) continue;
      for (VertexId c : g.neighbors(b)) {
        if (c <= b || g.degree(c) != 3 || !g.adjacent(a, c)) continue;
        std::array<VertexId, 3> t{a, b, c};
        std::sort(t.begin(), t.end(), [&](VertexId x, VertexId y) {
          if (g.weight(x) != g.weight(y)) return g.weight(x) < g.weight(y);
          return x < y;
        });
        return t;
      }
    }
  }
  return std::nullopt;
}

VertexSet cubic_triangle_set(const WeightedGraph& g, const std::array<VertexId, 3>& t) {
  auto [v, u, r] = t;
  VertexSet x = g.neighbors(v);
  for (VertexId up : g.neighbors(u))
    if (up != v && up != r) x = set_union(x, g.neighbors(up));
  for (VertexId rp : g.neighbors(r))
    if (rp != v && rp != u) x = set_union(x, g.neighbors(rp));
  return x;
}

std::optional<std::array<VertexId, 3>> find_path_into_cubic(const WeightedGraph& g) {
  for (VertexId u = 0; u < g.id_space(); ++u) {
    if (!g.contains(u) || g.degree(u) != 2) continue;
    const auto& nb = g.neighbors(u);
    for (int i = 0; i < 2; ++i) {
      VertexId v = nb[i], r = nb[1 - i];
      if (g.degree(v) == 3 && g.degree(r) == 2) return std::array<VertexId, 3>{v, u, r};
    }
  }
  return std::nullopt;
}

std::vector<Pattern> find_patterns(const WeightedGraph& g) {
  std::vector<Pattern> out;
  for (VertexId x = 0; x < g.id_space(); ++x) {
    if (!g.contains(x) || g.degree(x) != 3) continue;
    const auto& nx = g.neighbors(x);
    for (VertexId a : nx) {
      if (g.degree(a) != 2) continue;
      VertexId v = g.neighbors(a)[0] == x ? g.neighbors(a)[1] : g.neighbors(a)[0];
      VertexId others[2];
      int n = 0;
      for (VertexId y : nx)
        if (y != a) others[n++] = y;
      if (v == others[0] || v == others[1]) continue;
      out.push_back({x, a, others[0], others[1], v});
      out.push_back({x, a, others[1], others[0], v});
    }
  }
  return out;
}

std::vector<Branch> fallback_branches(const WeightedGraph& g) {
  VertexId v = g.max_degree_vertex();
  return {Branch{{v}, 1}, take_all(g.neighbors(v))};
}

}  // namespace wfpt::detail

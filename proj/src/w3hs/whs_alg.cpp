#include <algorithm>
#include <stdexcept>

#include "wfpt/w3hs.hpp"

namespace wfpt {

namespace {

void fire(SolveStats* s, const char* rule) {
  if (s) s->fire(rule);
}

// Choose `pick` (remove it with its edges), then drop `skip` from every edge.
struct Move {
  VertexSet pick;
  VertexSet skip;
};

class HsSearch {
 public:
  explicit HsSearch(SolveStats* stats) : stats_(stats) {}

  std::optional<VertexSet> run(WeightedHypergraph h, Weight W, int k) {
    if (stats_) ++stats_->nodes;
    // Unit edges force their vertex.
    VertexSet forced;
    while (true) {
      VertexId unit = -1;
      for (const auto& e : h.edges()) {
        if (e.size == 0) return std::nullopt;
        if (e.size == 1 && unit < 0) unit = e.v[0];
      }
      if (unit < 0) break;
      fire(stats_, "whs.unit");
      W -= h.weight(unit);
      --k;
      forced.push_back(unit);
      h = h.delete_vertices_and_edges({unit});
    }
    auto sub = rules(h, W, k);
    if (!sub) return std::nullopt;
    return set_union(*sub, make_set(forced));
  }

 private:
  std::optional<VertexSet> apply(const WeightedHypergraph& h, const Weight& W, int k, const Move& m) {
    WeightedHypergraph next = h.delete_vertices_and_edges(m.pick).shrink_away(m.skip);
    auto sub = run(std::move(next), W - h.total_weight(m.pick), k - static_cast<int>(m.pick.size()));
    if (!sub) return std::nullopt;
    return set_union(*sub, m.pick);
  }

  std::optional<VertexSet> branch(const WeightedHypergraph& h, const Weight& W, int k,
                                  const std::vector<Move>& ms) {
    for (const auto& m : ms)
      if (auto r = apply(h, W, k, m)) return r;
    return std::nullopt;
  }

  // The other edge of v when v lies in exactly two edges and it has size 3.
  std::optional<HyperEdge> other_triple(const WeightedHypergraph& h, VertexId v, const HyperEdge& known) {
    std::optional<HyperEdge> found;
    int count = 0;
    for (const auto& e : h.edges())
      if (e.contains(v)) {
        ++count;
        if (!(e == known)) found = e;
      }
    if (count != 2 || !found || found->size != 3) return std::nullopt;
    return found;
  }

  // Choose v and drop the rest of its 3-edge e.
  Move pick_and_drop_rest(VertexId v, const HyperEdge& e) {
    VertexSet rest;
    for (VertexId x : e)
      if (x != v) rest.push_back(x);
    return Move{{v}, rest};
  }

  std::optional<VertexSet> rules(const WeightedHypergraph& h, const Weight& W, int k) {
    if (W.sign() < 0 || k < 0) {
      fire(stats_, "whs.r1");
      return std::nullopt;
    }
    const auto& edges = h.edges();
    std::vector<int> deg = h.degrees();
    const VertexSet vs = h.vertices();

    if (std::all_of(vs.begin(), vs.end(), [&](VertexId v) { return deg[v] <= 2; })) {
      fire(stats_, "whs.r2");
      VertexSet a = deg2_hypergraph_min_whs(h);
      if (h.total_weight(a) <= W) return a;
      return std::nullopt;
    }

    for (const auto& e : edges)
      for (const auto& f : edges) {
        if (e == f || e.size >= f.size) continue;
        if (std::includes(f.begin(), f.end(), e.begin(), e.end())) {
          fire(stats_, "whs.r3");
          WeightedHypergraph next(h.id_space());
          for (VertexId v : vs) next.add_vertex(v, h.weight(v));
          for (const auto& g : edges)
            if (!(g == f)) next.add_edge(g);
          return rules(next, W, k);
        }
      }

    if (auto r = domination(h, W, k, vs, deg)) return *r;

    std::vector<HyperEdge> twos;
    for (const auto& e : edges)
      if (e.size == 2) twos.push_back(e);
    const int t = static_cast<int>(twos.size());
    auto w = [&](VertexId v) -> const Weight& { return h.weight(v); };
    auto other = [](const HyperEdge& e, VertexId v) { return e.v[0] == v ? e.v[1] : e.v[0]; };
    // 2-edges through v.
    auto twos_at = [&](VertexId v) {
      std::vector<HyperEdge> out;
      for (const auto& e : twos)
        if (e.contains(v)) out.push_back(e);
      return out;
    };
    auto rule = [&](const char* name, std::vector<Move> ms) {
      fire(stats_, name);
      return branch(h, W, k, ms);
    };

    if (t == 0) {
      VertexId v = -1;
      for (VertexId x : vs)
        if (v < 0 || deg[x] > deg[v]) v = x;
      return rule("whs.r5", {Move{{v}, {}}, Move{{}, {v}}});
    }

    if (t == 1) {
      VertexId a = twos[0].v[0], b = twos[0].v[1];
      for (auto [v, u] : {std::pair{a, b}, std::pair{b, a}})
        if (deg[v] >= 3) return rule("whs.r6", {Move{{v}, {}}, Move{{u}, {v}}});
      VertexId v = w(a) >= w(b) ? a : b;
      VertexId u = other(twos[0], v);
      if (auto e = other_triple(h, v, twos[0]))
        return rule("whs.r7", {pick_and_drop_rest(v, *e), Move{{u}, {v}}});
    }

    if (t == 3) {
      for (VertexId v : vs) {
        auto at = twos_at(v);
        if (at.size() != 3) continue;
        VertexSet s = make_set({other(at[0], v), other(at[1], v), other(at[2], v)});
        return rule("whs.r8", {Move{{v}, {}}, Move{s, {v}}});
      }
    }

    if (t == 2) {
      VertexId center = -1;
      for (VertexId x : twos[0])
        if (twos[1].contains(x)) center = x;
      if (center >= 0) {
        VertexId v = center;
        VertexId v1 = other(twos[0], v), v2 = other(twos[1], v);
        if (deg[v] >= 3) return rule("whs.r9", {Move{{v}, {}}, Move{make_set({v1, v2}), {v}}});
        for (auto [x, y] : {std::pair{v1, v2}, std::pair{v2, v1}})
          if (deg[x] >= 3) return rule("whs.r10", {Move{{x}, {}}, Move{{v}, {x}}});
        for (auto [x, y] : {std::pair{v1, v2}, std::pair{v2, v1}}) {
          if (deg[x] != 2 || !(w(x) >= w(v))) continue;
          HyperEdge vx = HyperEdge{x, v};
          if (auto e = other_triple(h, x, vx))
            return rule("whs.r11", {pick_and_drop_rest(x, *e), Move{{v}, {x}}});
        }
        if (w(v1) < w(v) && w(v2) < w(v) && deg[v] == 2)
          for (auto [x, y] : {std::pair{v1, v2}, std::pair{v2, v1}})
            if (deg[x] == 2) return rule("whs.r12", {Move{make_set({x, y}), {}}, Move{{v}, {x}}});
      } else {
        for (const auto& e : twos)
          for (VertexId x : e)
            if (deg[x] >= 2) return rule("whs.r13", {Move{{x}, {}}, Move{{other(e, x)}, {x}}});
      }
    }

    if (t == 3) {
      for (VertexId v : vs) {
        auto at = twos_at(v);
        if (at.size() == 2 && deg[v] >= 3)
          return rule("whs.r14",
                      {Move{{v}, {}}, Move{make_set({other(at[0], v), other(at[1], v)}), {v}}});
      }
    }

    // Leaf reduction through a degree-2 middle vertex.
    for (VertexId u : vs) {
      auto at = twos_at(u);
      if (at.size() != 2 || deg[u] != 2) continue;
      for (int i = 0; i < 2; ++i) {
        VertexId v = other(at[i], u), r = other(at[1 - i], u);
        if (v == r || deg[v] != 1) continue;
        fire(stats_, "whs.r15");
        Weight wr2 = w(r) - (w(u) - w(v));
        if (wr2.sign() <= 0) {
          auto sub = run(h.delete_vertices_and_edges(make_set({v, u, r})), W - w(v) - w(r), k - 1);
          if (!sub) return std::nullopt;
          return set_union(*sub, make_set({v, r}));
        }
        WeightedHypergraph next = h.delete_vertices_and_edges(make_set({v, u}));
        next.set_weight(r, wr2);
        auto sub = run(std::move(next), W - w(u), k - 1);
        if (!sub) return std::nullopt;
        return set_union(*sub, {set_contains(*sub, r) ? v : u});
      }
    }

    if (t == 3) {
      // Path v1 - v2 - v3 - v4 made of the three 2-edges.
      for (VertexId a : vs) {
        if (twos_at(a).size() != 1) continue;
        std::vector<VertexId> path{a};
        VertexId prev = -1, cur = a;
        while (path.size() < 5) {
          VertexId next = -1;
          for (const auto& e : twos_at(cur))
            if (other(e, cur) != prev) next = other(e, cur);
          if (next < 0) break;
          path.push_back(next);
          prev = cur;
          cur = next;
        }
        if (path.size() != 4) continue;
        if (!(w(path[1]) >= w(path[2]))) continue;
        return rule("whs.r16", {Move{{path[0]}, {}}, Move{{path[1]}, {path[0]}}});
      }
      std::vector<HyperEdge> lonely;
      for (const auto& e : twos)
        if (twos_at(e.v[0]).size() == 1 && twos_at(e.v[1]).size() == 1) lonely.push_back(e);
      for (const auto& e : lonely)
        for (VertexId v : e)
          if (deg[v] >= 3) return rule("whs.r17", {Move{{v}, {}}, Move{{other(e, v)}, {v}}});
      for (const auto& e : lonely) {
        VertexId v = w(e.v[0]) >= w(e.v[1]) ? e.v[0] : e.v[1];
        if (auto f = other_triple(h, v, e))
          return rule("whs.r18", {pick_and_drop_rest(v, *f), Move{{other(e, v)}, {v}}});
      }
    }

    for (int want : {4, 3}) {
      for (VertexId v : vs) {
        auto at = twos_at(v);
        if (want == 4 ? at.size() < 4 : at.size() != 3) continue;
        VertexSet s;
        for (const auto& e : at) s.push_back(other(e, v));
        return rule(want == 4 ? "whs.r19" : "whs.r20", {Move{{v}, {}}, Move{make_set(s), {v}}});
      }
    }

    for (VertexId u : vs) {
      auto at = twos_at(u);
      if (at.size() == 2 && deg[u] >= 3)
        return rule("whs.r21",
                    {Move{{u}, {}}, Move{make_set({other(at[0], u), other(at[1], u)}), {u}}});
    }

    for (VertexId v : vs) {
      auto at = twos_at(v);
      if (at.size() == 1 && deg[v] >= 2) return rule("whs.r22", {Move{{v}, {}}, Move{{other(at[0], v)}, {v}}});
    }

    fire(stats_, "whs.fallback");
    if (stats_) ++stats_->fallback_branches;
    if (!twos.empty()) {
      VertexId a = twos[0].v[0], b = twos[0].v[1];
      return branch(h, W, k, {Move{{a}, {}}, Move{{b}, {a}}});
    }
    VertexId v = -1;
    for (VertexId x : vs)
      if (v < 0 || deg[x] > deg[v]) v = x;
    return branch(h, W, k, {Move{{v}, {}}, Move{{}, {v}}});
  }

  // v hits every edge that u hits and is no heavier: u is never needed.
  std::optional<std::optional<VertexSet>> domination(const WeightedHypergraph& h, const Weight& W, int k,
                                                     const VertexSet& vs, const std::vector<int>& deg) {
    const auto& edges = h.edges();
    for (VertexId u : vs)
      for (VertexId v : vs) {
        if (u == v || h.weight(v) > h.weight(u) || deg[v] < deg[u]) continue;
        bool inside = true;
        for (const auto& e : edges)
          if (e.contains(u) && !e.contains(v)) {
            inside = false;
            break;
          }
        if (!inside) continue;
        fire(stats_, "whs.r4");
        bool pair_edge = std::find(edges.begin(), edges.end(), HyperEdge{v, u}) != edges.end();
        if (pair_edge) {
          auto sub = run(h.delete_vertices_and_edges(make_set({v, u})), W - h.weight(v), k - 1);
          if (!sub) return std::optional<std::optional<VertexSet>>(std::nullopt);
          return std::optional<std::optional<VertexSet>>(set_union(*sub, {v}));
        }
        return std::optional<std::optional<VertexSet>>(run(h.shrink_away({u}), W, k));
      }
    return std::nullopt;
  }

  SolveStats* stats_;
};

}  // namespace

std::optional<VertexSet> solve_k_w3hs(const WeightedHypergraph& h, const Weight& W, int k, SolveStats* stats) {
  for (VertexId v : h.vertices())
    if (h.weight(v) < Weight(1)) throw std::invalid_argument("vertex weights must be at least 1");
  for (const auto& e : h.edges())
    if (e.size < 1 || e.size > 3) throw std::invalid_argument("edges must have 1 to 3 vertices");
  HsSearch s(stats);
  return s.run(h, W, k);
}

}  // namespace wfpt

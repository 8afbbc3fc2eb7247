#include "wfpt/oracles.hpp"

#include <functional>
#include <stdexcept>

namespace wfpt {

namespace {

template <typename Witness>
class Collector {
 public:
  Collector(int max_size, const Weight& W, int k, bool maximise) : W_(W), k_(k), max_(maximise) {
    r_.best_by_size.resize(max_size + 1);
    r_.witness_by_size.resize(max_size + 1);
  }

  void add(int size, const Weight& w, const Witness& x) {
    auto better = [&](const std::optional<Weight>& cur) { return !cur || (max_ ? w > *cur : w < *cur); };
    if (better(r_.best_by_size[size])) {
      r_.best_by_size[size] = w;
      r_.witness_by_size[size] = x;
    }
    if (better(r_.best_weight)) r_.best_weight = w;
    if (size <= k_ && better(r_.best_weight_within_k)) r_.best_weight_within_k = w;
    bool meets = max_ ? w >= W_ : w <= W_;
    if (meets) {
      if (!r_.min_size_meeting_W || size < *r_.min_size_meeting_W) r_.min_size_meeting_W = size;
      if (size <= k_) r_.feasible = true;
    }
  }

  OracleReport<Witness>& report() { return r_; }

 private:
  Weight W_;
  int k_;
  bool max_;
  OracleReport<Witness> r_;
};

VertexSet subset(const VertexSet& vs, unsigned long mask) {
  VertexSet out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if ((mask >> i) & 1) out.push_back(vs[i]);
  return out;
}

}  // namespace

OracleReport<VertexSet> brute_min_wvc(const WeightedGraph& g, const Weight& W, int k) {
  if (g.num_vertices() > 20) throw std::invalid_argument("brute force vertex cover limited to 20 vertices");
  const VertexSet vs = g.vertices();
  Collector<VertexSet> c(static_cast<int>(vs.size()), W, k, false);
  for (unsigned long m = 0; m < (1UL << vs.size()); ++m) {
    VertexSet s = subset(vs, m);
    if (g.is_vertex_cover(s)) c.add(static_cast<int>(s.size()), g.total_weight(s), s);
  }
  return c.report();
}

OracleReport<VertexSet> brute_min_w3hs(const WeightedHypergraph& h, const Weight& W, int k) {
  if (h.num_vertices() > 14) throw std::invalid_argument("brute force hitting set limited to 14 vertices");
  const VertexSet vs = h.vertices();
  Collector<VertexSet> c(static_cast<int>(vs.size()), W, k, false);
  for (unsigned long m = 0; m < (1UL << vs.size()); ++m) {
    VertexSet s = subset(vs, m);
    if (h.is_hitting_set(s)) c.add(static_cast<int>(s.size()), h.total_weight(s), s);
  }
  return c.report();
}

OracleReport<EdgeSet> brute_min_weds(const EdgeWeightedGraph& g, const Weight& W, int k) {
  if (g.num_edges() > 16) throw std::invalid_argument("brute force edge domination limited to 16 edges");
  const auto es = g.edges();
  Collector<EdgeSet> c(static_cast<int>(es.size()), W, k, false);
  for (unsigned long m = 0; m < (1UL << es.size()); ++m) {
    EdgeSet s;
    for (std::size_t i = 0; i < es.size(); ++i)
      if ((m >> i) & 1) s.push_back(es[i]);
    if (is_edge_dominating_set(g, s)) c.add(static_cast<int>(s.size()), g.total_weight(s), s);
  }
  return c.report();
}

WiobReport brute_max_wiob(const WeightedDigraph& g, const Weight& W, int k) {
  if (g.num_vertices() > 9) throw std::invalid_argument("brute force out-branching limited to 9 vertices");
  const VertexSet vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  Collector<OutTree> c(std::max(0, n - 1), W, k, true);
  WiobReport out;
  std::vector<VertexId> parent(g.id_space(), -1);
  for (VertexId r : vs) {
    // Assign a parent to every other vertex; reject assignments closing a cycle.
    std::function<void(int)> go = [&](int i) {
      if (i == n) {
        OutTree t{r, {}};
        for (VertexId v : vs)
          if (v != r) t.parent[v] = parent[v];
        VertexSet in = t.internal();
        c.add(static_cast<int>(in.size()), g.total_weight(in), t);
        out.realised.insert({r, in});
        return;
      }
      VertexId v = vs[i];
      if (v == r) return go(i + 1);
      for (VertexId p : g.in(v)) {
        VertexId x = p;
        bool cycle = false;
        while (x != -1 && x != r) {
          if (x == v) {
            cycle = true;
            break;
          }
          x = parent[x];
        }
        if (cycle) continue;
        parent[v] = p;
        go(i + 1);
        parent[v] = -1;
      }
    };
    go(0);
  }
  static_cast<OracleReport<OutTree>&>(out) = std::move(c.report());
  return out;
}

std::optional<VertexSet> baseline_alg3(const WeightedGraph& g, const Weight& W, int k) {
  if (W.sign() < 0 || k < 0) return std::nullopt;
  if (g.num_edges() == 0) return VertexSet{};
  for (VertexId v : g.vertices()) {
    if (g.degree(v) != 1) continue;
    VertexId u = g.neighbors(v)[0];
    if (g.weight(v) >= g.weight(u)) {
      auto sub = baseline_alg3(g.without(make_set({v, u})), W - g.weight(u), k - 1);
      if (!sub) return std::nullopt;
      return set_union(*sub, {u});
    }
    WeightedGraph h = g.without({v});
    h.set_weight(u, g.weight(u) - g.weight(v));
    auto sub = baseline_alg3(h, W - g.weight(v), k);
    if (!sub) return std::nullopt;
    if (!set_contains(*sub, u)) return set_union(*sub, {v});
    return sub;
  }
  VertexId v = g.max_degree_vertex();
  const VertexSet& nv = g.neighbors(v);
  if (auto sub = baseline_alg3(g.without(nv), W - g.total_weight(nv), k - static_cast<int>(nv.size())))
    return set_union(*sub, nv);
  auto sub = baseline_alg3(g.without({v}), W - g.weight(v), k - 1);
  if (!sub) return std::nullopt;
  return set_union(*sub, {v});
}

}  // namespace wfpt

#include "wfpt/weds.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "wfpt/edge_cover.hpp"

namespace wfpt {

Edge canonical(VertexId u, VertexId v) { return u < v ? Edge{u, v} : Edge{v, u}; }

void EdgeWeightedGraph::add_edge(VertexId u, VertexId v, const Weight& w) {
  if (u == v) throw std::invalid_argument("self-loop");
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
    throw std::invalid_argument("edge endpoint out of range");
  Edge e = canonical(u, v);
  if (weight_.count(e)) throw std::invalid_argument("duplicate edge");
  weight_.emplace(e, w);
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

bool EdgeWeightedGraph::adjacent(VertexId u, VertexId v) const { return weight_.count(canonical(u, v)) > 0; }

const Weight& EdgeWeightedGraph::weight(VertexId u, VertexId v) const {
  auto it = weight_.find(canonical(u, v));
  if (it == weight_.end()) throw std::invalid_argument("no such edge");
  return it->second;
}

std::vector<Edge> EdgeWeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(weight_.size());
  for (const auto& [e, w] : weight_) out.push_back(e);
  return out;
}

Weight EdgeWeightedGraph::total_weight(const std::vector<Edge>& es) const {
  Weight s(0);
  for (const auto& e : es) s += weight(e.first, e.second);
  return s;
}

WeightedGraph EdgeWeightedGraph::skeleton() const {
  WeightedGraph g = WeightedGraph::complete_id_space(num_vertices());
  for (const auto& [e, w] : weight_) g.add_edge(e.first, e.second);
  return g;
}

VertexSet endpoints(const EdgeSet& es) {
  VertexSet out;
  for (const auto& e : es) {
    out.push_back(e.first);
    out.push_back(e.second);
  }
  return make_set(out);
}

bool is_edge_dominating_set(const EdgeWeightedGraph& g, const EdgeSet& es) {
  for (const auto& e : es)
    if (!g.adjacent(e.first, e.second)) return false;
  return endpoints_form_vertex_cover(g, es);
}

bool endpoints_form_vertex_cover(const EdgeWeightedGraph& g, const EdgeSet& es) {
  VertexSet vu = endpoints(es);
  for (const auto& e : g.edges())
    if (!set_contains(vu, e.first) && !set_contains(vu, e.second)) return false;
  return true;
}

namespace {

bool is_small_clique(const WeightedGraph& g, const VertexSet& c) {
  ComponentClass k = classify_component(g, c);
  return k != ComponentClass::Other;
}

bool residual_is_good(const WeightedGraph& skel, const VertexSet& a) {
  WeightedGraph r = skel.without(a);
  for (const auto& c : connected_components(r))
    if (!is_small_clique(r, c)) return false;
  return true;
}

}  // namespace

VcRepresentation enumerate_good_rep(const EdgeWeightedGraph& g, int budget, SolveStats* stats) {
  VcRepresentation rep{{}, budget};
  if (budget < 0) return rep;
  const WeightedGraph skel = g.skeleton();
  std::function<void(const VertexSet&)> go = [&](const VertexSet& a) {
    if (stats) ++stats->nodes;
    if (static_cast<int>(a.size()) > budget) return;
    WeightedGraph r = skel.without(a);
    for (const auto& c : connected_components(r)) {
      if (is_small_clique(r, c)) continue;
      VertexId v = c[0];
      for (VertexId x : c)
        if (r.degree(x) > r.degree(v)) v = x;
      go(set_union(a, {v}));
      go(set_union(a, r.neighbors(v)));
      return;
    }
    rep.family.push_back(a);
  };
  go({});
  return rep;
}

std::optional<EdgeSet> complete_eds(const EdgeWeightedGraph& g, const VertexSet& a) {
  const WeightedGraph skel = g.skeleton();
  WeightedGraph r = skel.without(a);
  // Per residual component, the ways some of its vertices must join V(U).
  std::vector<std::vector<VertexSet>> options;
  for (const auto& c : connected_components(r)) {
    switch (classify_component(r, c)) {
      case ComponentClass::IsolatedVertex:
        break;
      case ComponentClass::PathOn2:
        options.push_back({{c[0]}, {c[1]}});
        break;
      case ComponentClass::Triangle:
        options.push_back({{c[0], c[1]}, {c[0], c[2]}, {c[1], c[2]}});
        break;
      case ComponentClass::Other:
        throw std::invalid_argument("residual component is not a clique on at most three vertices");
    }
  }
  const auto edges = g.edges();
  std::vector<Link> links;
  for (const auto& e : edges) links.push_back(Link{e.first, e.second, g.weight(e.first, e.second)});

  std::optional<EdgeSet> best;
  Weight best_w(0);
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    VertexSet req = a;
    for (std::size_t i = 0; i < options.size(); ++i) req = set_union(req, options[i][pick[i]]);
    try {
      auto idx = min_weight_edge_cover(g.num_vertices(), links, req);
      EdgeSet u;
      for (int i : idx) u.push_back(edges[i]);
      Weight w = g.total_weight(u);
      if (!best || w < best_w) {
        best = std::move(u);
        best_w = w;
      }
    } catch (const InfeasibleError&) {
    }
    std::size_t i = 0;
    while (i < options.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == options.size()) break;
  }
  return best;
}

namespace {

std::optional<EdgeSet> lightest_completion(const EdgeWeightedGraph& g, const std::vector<VertexSet>& family) {
  std::optional<EdgeSet> best;
  Weight best_w(0);
  for (const auto& a : family) {
    auto u = complete_eds(g, a);
    if (!u) continue;
    Weight w = g.total_weight(*u);
    if (!best || w < best_w) {
      best = std::move(u);
      best_w = w;
    }
  }
  return best;
}

}  // namespace

std::optional<EdgeSet> solve_k_weds(const EdgeWeightedGraph& g, const Weight& W, int k, SolveStats* stats) {
  for (const auto& e : g.edges())
    if (g.weight(e.first, e.second) < Weight(1)) throw std::invalid_argument("edge weights must be at least 1");
  if (k < 0 || W.sign() < 0) return std::nullopt;
  auto best = lightest_completion(g, enumerate_good_rep(g, 2 * k, stats).family);
  if (best && g.total_weight(*best) <= W) return best;
  return std::nullopt;
}

std::vector<VertexSet> weds_star_supersets(const EdgeWeightedGraph& g, const EdgeSet& u) {
  if (!is_edge_dominating_set(g, u)) throw std::invalid_argument("given set is not an edge dominating set");
  const VertexSet vu = endpoints(u);
  std::set<VertexSet> out;
  std::vector<int> choice(u.size(), 0);
  while (true) {
    VertexSet s;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (choice[i] != 1) s.push_back(u[i].first);
      if (choice[i] != 0) s.push_back(u[i].second);
    }
    s = make_set(s);
    VertexSet a = s;
    for (VertexId x : set_difference(vu, s)) a = set_union(a, g.neighbors(x));
    out.insert(a);
    std::size_t i = 0;
    while (i < u.size() && ++choice[i] == 3) choice[i++] = 0;
    if (i == u.size()) break;
  }
  return {out.begin(), out.end()};
}

EdgeSet min_unweighted_eds(const EdgeWeightedGraph& g) {
  EdgeWeightedGraph unit(g.num_vertices());
  for (const auto& e : g.edges()) unit.add_edge(e.first, e.second, Weight(1));
  for (int j = 0;; ++j) {
    auto best = lightest_completion(unit, enumerate_good_rep(unit, 2 * j).family);
    if (best && static_cast<int>(best->size()) <= j) return *best;
  }
}

std::optional<EdgeSet> solve_weds_by_t(const EdgeWeightedGraph& g, const Weight& W) {
  for (const auto& e : g.edges())
    if (g.weight(e.first, e.second) < Weight(1)) throw std::invalid_argument("edge weights must be at least 1");
  const WeightedGraph skel = g.skeleton();
  std::vector<VertexSet> family;
  for (const auto& a : weds_star_supersets(g, min_unweighted_eds(g))) {
    if (!skel.is_vertex_cover(a)) continue;
    VertexSet shrunk = a;
    for (VertexId x : a) {
      VertexSet trial = set_difference(shrunk, {x});
      if (residual_is_good(skel, trial)) shrunk = std::move(trial);
    }
    family.push_back(std::move(shrunk));
  }
  auto best = lightest_completion(g, family);
  if (best && g.total_weight(*best) <= W) return best;
  return std::nullopt;
}

}  // namespace wfpt

#include "wfpt/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace wfpt {

namespace {

void check_new_vertex(int id_space, const std::vector<char>& present, VertexId v) {
  if (v < 0 || v >= id_space) throw std::invalid_argument("vertex id out of range");
  if (present[v]) throw std::invalid_argument("duplicate vertex " + std::to_string(v));
}

void insert_sorted(std::vector<VertexId>& xs, VertexId v) {
  xs.insert(std::lower_bound(xs.begin(), xs.end(), v), v);
}

void erase_sorted(std::vector<VertexId>& xs, VertexId v) {
  auto it = std::lower_bound(xs.begin(), xs.end(), v);
  if (it != xs.end() && *it == v) xs.erase(it);
}

}  // namespace

// ---------------------------------------------------------------- graph

WeightedGraph::WeightedGraph(int id_space)
    : present_(id_space, 0), adj_(id_space), weight_(id_space) {}

WeightedGraph WeightedGraph::complete_id_space(int n, const Weight& w) {
  WeightedGraph g(n);
  for (VertexId v = 0; v < n; ++v) g.add_vertex(v, w);
  return g;
}

void WeightedGraph::add_vertex(VertexId v, const Weight& w) {
  check_new_vertex(id_space(), present_, v);
  present_[v] = 1;
  weight_[v] = w;
  ++num_vertices_;
}

void WeightedGraph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  if (!contains(u) || !contains(v)) throw std::invalid_argument("edge endpoint not present");
  if (adjacent(u, v)) return;
  insert_sorted(adj_[u], v);
  insert_sorted(adj_[v], u);
  ++num_edges_;
}

void WeightedGraph::remove_vertex(VertexId v) {
  if (!contains(v)) return;
  for (VertexId u : adj_[v]) erase_sorted(adj_[u], v);
  num_edges_ -= degree(v);
  adj_[v].clear();
  present_[v] = 0;
  --num_vertices_;
}

void WeightedGraph::remove_vertices(const VertexSet& vs) {
  for (VertexId v : vs) remove_vertex(v);
}

bool WeightedGraph::adjacent(VertexId u, VertexId v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  VertexId target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

Weight WeightedGraph::total_weight(const VertexSet& vs) const {
  Weight s;
  for (VertexId v : vs) s += weight_[v];
  return s;
}

VertexSet WeightedGraph::vertices() const {
  VertexSet out;
  out.reserve(num_vertices_);
  for (VertexId v = 0; v < id_space(); ++v)
    if (present_[v]) out.push_back(v);
  return out;
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (VertexId v = 0; v < id_space(); ++v)
    for (VertexId u : adj_[v])
      if (v < u) out.emplace_back(v, u);
  return out;
}

int WeightedGraph::max_degree() const {
  int d = 0;
  for (VertexId v = 0; v < id_space(); ++v) d = std::max(d, degree(v));
  return d;
}

VertexId WeightedGraph::max_degree_vertex() const {
  VertexId best = -1;
  for (VertexId v = 0; v < id_space(); ++v)
    if (present_[v] && (best < 0 || degree(v) > degree(best))) best = v;
  return best;
}

WeightedGraph WeightedGraph::without(const VertexSet& vs) const {
  WeightedGraph g = *this;
  g.remove_vertices(vs);
  return g;
}

bool WeightedGraph::is_vertex_cover(const VertexSet& vs) const {
  std::vector<char> in(id_space(), 0);
  for (VertexId v : vs) {
    if (!contains(v)) return false;
    in[v] = 1;
  }
  for (VertexId v = 0; v < id_space(); ++v)
    for (VertexId u : adj_[v])
      if (!in[v] && !in[u]) return false;
  return true;
}

// ---------------------------------------------------------------- hyperedge

HyperEdge::HyperEdge(std::initializer_list<VertexId> vs) : HyperEdge(from(std::vector<VertexId>(vs))) {}

HyperEdge HyperEdge::from(const std::vector<VertexId>& vs) {
  std::vector<VertexId> s = make_set(vs);
  if (s.size() > 3) throw std::invalid_argument("hyperedge with more than 3 vertices");
  HyperEdge e;
  e.size = static_cast<int>(s.size());
  for (int i = 0; i < e.size; ++i) e.v[i] = s[i];
  return e;
}

bool HyperEdge::contains(VertexId x) const {
  for (int i = 0; i < size; ++i)
    if (v[i] == x) return true;
  return false;
}

HyperEdge HyperEdge::minus(VertexId x) const {
  HyperEdge e;
  for (int i = 0; i < size; ++i)
    if (v[i] != x) e.v[e.size++] = v[i];
  return e;
}

// ---------------------------------------------------------------- hypergraph

WeightedHypergraph::WeightedHypergraph(int id_space) : present_(id_space, 0), weight_(id_space) {}

void WeightedHypergraph::add_vertex(VertexId v, const Weight& w) {
  check_new_vertex(id_space(), present_, v);
  present_[v] = 1;
  weight_[v] = w;
  ++num_vertices_;
}

void WeightedHypergraph::add_edge(const std::vector<VertexId>& vs) {
  if (vs.empty()) throw std::invalid_argument("empty hyperedge");
  add_edge(HyperEdge::from(vs));
}

void WeightedHypergraph::add_edge(const HyperEdge& e) {
  for (VertexId x : e)
    if (!contains(x)) throw std::invalid_argument("hyperedge endpoint not present");
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return;
  edges_.insert(it, e);
}

Weight WeightedHypergraph::total_weight(const VertexSet& vs) const {
  Weight s;
  for (VertexId v : vs) s += weight_[v];
  return s;
}

VertexSet WeightedHypergraph::vertices() const {
  VertexSet out;
  for (VertexId v = 0; v < id_space(); ++v)
    if (present_[v]) out.push_back(v);
  return out;
}

int WeightedHypergraph::degree(VertexId v) const {
  int d = 0;
  for (const auto& e : edges_)
    if (e.contains(v)) ++d;
  return d;
}

std::vector<int> WeightedHypergraph::degrees() const {
  std::vector<int> d(id_space(), 0);
  for (const auto& e : edges_)
    for (VertexId x : e) ++d[x];
  return d;
}

bool WeightedHypergraph::is_hitting_set(const VertexSet& vs) const {
  for (VertexId v : vs)
    if (!contains(v)) return false;
  for (const auto& e : edges_) {
    bool hit = false;
    for (VertexId x : e) hit = hit || set_contains(vs, x);
    if (!hit) return false;
  }
  return true;
}

void WeightedHypergraph::normalize_edges() {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

WeightedHypergraph WeightedHypergraph::delete_vertices_and_edges(const VertexSet& vs) const {
  WeightedHypergraph h = *this;
  for (VertexId v : vs) {
    if (!h.contains(v)) continue;
    h.present_[v] = 0;
    --h.num_vertices_;
  }
  std::erase_if(h.edges_, [&](const HyperEdge& e) {
    for (VertexId x : e)
      if (set_contains(vs, x)) return true;
    return false;
  });
  return h;
}

WeightedHypergraph WeightedHypergraph::shrink_away(const VertexSet& vs) const {
  WeightedHypergraph h = *this;
  for (VertexId v : vs) {
    if (!h.contains(v)) continue;
    h.present_[v] = 0;
    --h.num_vertices_;
  }
  for (auto& e : h.edges_) {
    HyperEdge f;
    for (VertexId x : e)
      if (!set_contains(vs, x)) f.v[f.size++] = x;
    e = f;
  }
  h.normalize_edges();
  return h;
}

// ---------------------------------------------------------------- digraph

WeightedDigraph::WeightedDigraph(int id_space)
    : present_(id_space, 0), out_(id_space), in_(id_space), weight_(id_space) {}

void WeightedDigraph::add_vertex(VertexId v, const Weight& w) {
  check_new_vertex(id_space(), present_, v);
  present_[v] = 1;
  weight_[v] = w;
  ++num_vertices_;
}

void WeightedDigraph::add_arc(VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("self-loop arc on vertex " + std::to_string(u));
  if (!contains(u) || !contains(v)) throw std::invalid_argument("arc endpoint not present");
  if (has_arc(u, v)) return;
  insert_sorted(out_[u], v);
  insert_sorted(in_[v], u);
  ++num_arcs_;
}

bool WeightedDigraph::has_arc(VertexId u, VertexId v) const {
  if (!contains(u) || !contains(v)) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

Weight WeightedDigraph::total_weight(const VertexSet& vs) const {
  Weight s;
  for (VertexId v : vs) s += weight_[v];
  return s;
}

VertexSet WeightedDigraph::vertices() const {
  VertexSet out;
  for (VertexId v = 0; v < id_space(); ++v)
    if (present_[v]) out.push_back(v);
  return out;
}

std::vector<Edge> WeightedDigraph::arcs() const {
  std::vector<Edge> out;
  for (VertexId v = 0; v < id_space(); ++v)
    for (VertexId u : out_[v]) out.emplace_back(v, u);
  return out;
}

// ---------------------------------------------------------------- operations

namespace {

template <typename G>
VertexSet checked_keep(const G& g, const VertexSet& keep) {
  VertexSet k = make_set(keep);
  for (VertexId v : k)
    if (!g.contains(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v));
  return k;
}

}  // namespace

WeightedGraph induced_subgraph(const WeightedGraph& g, const VertexSet& keep_in) {
  const VertexSet keep = checked_keep(g, keep_in);
  VertexSet drop;
  for (VertexId v : g.vertices())
    if (!set_contains(keep, v)) drop.push_back(v);
  return g.without(drop);
}

WeightedHypergraph induced_subgraph(const WeightedHypergraph& h, const VertexSet& keep_in) {
  const VertexSet keep = checked_keep(h, keep_in);
  VertexSet drop;
  for (VertexId v : h.vertices())
    if (!set_contains(keep, v)) drop.push_back(v);
  WeightedHypergraph r = h.shrink_away(drop);
  // Edges that lost every vertex are dropped here.
  WeightedHypergraph out(r.id_space());
  for (VertexId v : r.vertices()) out.add_vertex(v, r.weight(v));
  for (const auto& e : r.edges())
    if (e.size > 0) out.add_edge(e);
  return out;
}

WeightedHypergraph delete_vertex_and_edges(const WeightedHypergraph& h, VertexId v) {
  if (!h.contains(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v));
  return h.delete_vertices_and_edges({v});
}

std::vector<VertexSet> connected_components(const WeightedGraph& g) {
  std::vector<VertexSet> comps;
  std::vector<char> seen(g.id_space(), 0);
  for (VertexId s = 0; s < g.id_space(); ++s) {
    if (!g.contains(s) || seen[s]) continue;
    VertexSet comp;
    std::vector<VertexId> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId u : g.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<VertexSet> connected_components(const WeightedHypergraph& h) {
  std::vector<VertexId> parent(h.id_space());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : h.edges())
    for (int i = 1; i < e.size; ++i) {
      VertexId a = find(e.v[0]), b = find(e.v[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<VertexSet> comps;
  std::vector<int> index(h.id_space(), -1);
  for (VertexId v : h.vertices()) {
    VertexId r = find(v);
    if (index[r] < 0) {
      index[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[index[r]].push_back(v);
  }
  return comps;
}

ComponentClass classify_component(const WeightedGraph& g, const VertexSet& comp) {
  if (comp.empty()) throw std::invalid_argument("empty vertex set is not a component");
  VertexSet sorted = make_set(comp);
  for (VertexId v : sorted) {
    if (!g.contains(v)) throw std::invalid_argument("vertex outside graph");
    for (VertexId u : g.neighbors(v))
      if (!set_contains(sorted, u)) throw std::invalid_argument("vertex set is not closed");
  }
  auto comps = connected_components(induced_subgraph(g, sorted));
  if (comps.size() != 1) throw std::invalid_argument("vertex set is not connected");
  std::size_t n = sorted.size();
  std::size_t m = 0;
  for (VertexId v : sorted) m += g.degree(v);
  m /= 2;
  if (n == 1) return ComponentClass::IsolatedVertex;
  if (n == 2) return ComponentClass::PathOn2;
  if (n == 3 && m == 3) return ComponentClass::Triangle;
  return ComponentClass::Other;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const VertexSet& a, VertexId v) { return std::binary_search(a.begin(), a.end(), v); }

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet make_set(std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

}  // namespace wfpt

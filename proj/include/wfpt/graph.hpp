#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "wfpt/weight.hpp"

namespace wfpt {

using VertexId = int;
// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;
using Edge = std::pair<VertexId, VertexId>;  // canonical: first < second

enum class ComponentClass { IsolatedVertex, PathOn2, Triangle, Other };

// Simple undirected vertex-weighted graph. Vertex ids live in a fixed id
// space [0, id_space) so that subgraphs keep the ids of the input.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int id_space);
  // Vertices 0..n-1 present, all with the given weight.
  static WeightedGraph complete_id_space(int n, const Weight& w = Weight(1));

  void add_vertex(VertexId v, const Weight& w);
  // Throws on self-loops and absent endpoints; parallel edges are ignored.
  void add_edge(VertexId u, VertexId v);
  void remove_vertex(VertexId v);
  void remove_vertices(const VertexSet& vs);
  void set_weight(VertexId v, const Weight& w) { weight_[v] = w; }

  int id_space() const { return static_cast<int>(present_.size()); }
  bool contains(VertexId v) const {
    return v >= 0 && v < id_space() && present_[v];
  }
  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return num_edges_; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(VertexId u, VertexId v) const;
  const Weight& weight(VertexId v) const { return weight_[v]; }
  Weight total_weight(const VertexSet& vs) const;
  VertexSet vertices() const;
  std::vector<Edge> edges() const;
  int max_degree() const;
  // Smallest id among the vertices of maximum degree, or -1 if empty.
  VertexId max_degree_vertex() const;

  WeightedGraph without(const VertexSet& vs) const;
  bool is_vertex_cover(const VertexSet& vs) const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::vector<char> present_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<Weight> weight_;
  int num_vertices_ = 0;
  int num_edges_ = 0;
};

// Hyperedge of size 1..3, vertices sorted ascending.
struct HyperEdge {
  std::array<VertexId, 3> v{-1, -1, -1};
  int size = 0;

  HyperEdge() = default;
  HyperEdge(std::initializer_list<VertexId> vs);
  static HyperEdge from(const std::vector<VertexId>& vs);

  bool contains(VertexId x) const;
  const VertexId* begin() const { return v.data(); }
  const VertexId* end() const { return v.data() + size; }
  // Copy without x; may produce an empty edge.
  HyperEdge minus(VertexId x) const;

  friend bool operator==(const HyperEdge& a, const HyperEdge& b) {
    return a.size == b.size && a.v == b.v;
  }
  friend auto operator<=>(const HyperEdge& a, const HyperEdge& b) {
    if (a.size != b.size) return a.size <=> b.size;
    return a.v <=> b.v;
  }
};

// Vertex-weighted hypergraph with edges of size 1..3 (size 0 edges can appear
// transiently inside solvers and mean "unhittable").
class WeightedHypergraph {
 public:
  WeightedHypergraph() = default;
  explicit WeightedHypergraph(int id_space);

  void add_vertex(VertexId v, const Weight& w);
  // Duplicate edges are merged. Throws on size > 3 or absent vertices.
  void add_edge(const std::vector<VertexId>& vs);
  void add_edge(const HyperEdge& e);
  void set_weight(VertexId v, const Weight& w) { weight_[v] = w; }

  int id_space() const { return static_cast<int>(present_.size()); }
  bool contains(VertexId v) const {
    return v >= 0 && v < id_space() && present_[v];
  }
  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<HyperEdge>& edges() const { return edges_; }
  const Weight& weight(VertexId v) const { return weight_[v]; }
  Weight total_weight(const VertexSet& vs) const;
  VertexSet vertices() const;
  // Number of edges containing v.
  int degree(VertexId v) const;
  std::vector<int> degrees() const;
  bool is_hitting_set(const VertexSet& vs) const;

  // Removes v and every edge containing it.
  WeightedHypergraph delete_vertices_and_edges(const VertexSet& vs) const;
  // Removes vs from the vertex set and from every edge (edges shrink).
  WeightedHypergraph shrink_away(const VertexSet& vs) const;

  friend bool operator==(const WeightedHypergraph&, const WeightedHypergraph&) = default;

 private:
  void normalize_edges();

  std::vector<char> present_;
  std::vector<Weight> weight_;
  std::vector<HyperEdge> edges_;  // sorted, unique
  int num_vertices_ = 0;
};

// Vertex-weighted simple digraph.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  explicit WeightedDigraph(int id_space);

  void add_vertex(VertexId v, const Weight& w);
  void add_arc(VertexId u, VertexId v);

  int id_space() const { return static_cast<int>(present_.size()); }
  bool contains(VertexId v) const {
    return v >= 0 && v < id_space() && present_[v];
  }
  int num_vertices() const { return num_vertices_; }
  int num_arcs() const { return num_arcs_; }
  const std::vector<VertexId>& out(VertexId v) const { return out_[v]; }
  const std::vector<VertexId>& in(VertexId v) const { return in_[v]; }
  bool has_arc(VertexId u, VertexId v) const;
  const Weight& weight(VertexId v) const { return weight_[v]; }
  Weight total_weight(const VertexSet& vs) const;
  VertexSet vertices() const;
  std::vector<Edge> arcs() const;  // (tail, head), ascending

  friend bool operator==(const WeightedDigraph&, const WeightedDigraph&) = default;

 private:
  std::vector<char> present_;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::vector<Weight> weight_;
  int num_vertices_ = 0;
  int num_arcs_ = 0;
};

WeightedGraph induced_subgraph(const WeightedGraph& g, const VertexSet& keep);
// Edges are intersected with keep; emptied edges vanish, duplicates merge.
WeightedHypergraph induced_subgraph(const WeightedHypergraph& h, const VertexSet& keep);
WeightedHypergraph delete_vertex_and_edges(const WeightedHypergraph& h, VertexId v);

// Components ordered by smallest vertex id; each component sorted.
std::vector<VertexSet> connected_components(const WeightedGraph& g);
std::vector<VertexSet> connected_components(const WeightedHypergraph& h);
// Throws std::invalid_argument if comp is not a connected component of g.
ComponentClass classify_component(const WeightedGraph& g, const VertexSet& comp);

// Small helpers on sorted vertex sets.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& a, VertexId v);
bool is_subset(const VertexSet& a, const VertexSet& b);
VertexSet make_set(std::vector<VertexId> vs);

}  // namespace wfpt

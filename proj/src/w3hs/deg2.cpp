#include <stdexcept>

#include "wfpt/edge_cover.hpp"
#include "wfpt/w3hs.hpp"

namespace wfpt {

VertexSet deg2_hypergraph_min_whs(const WeightedHypergraph& h) {
  const auto& edges = h.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<std::vector<int>> at(h.id_space());
  for (int i = 0; i < m; ++i)
    for (VertexId x : edges[i]) at[x].push_back(i);
  std::vector<Link> links;
  std::vector<VertexId> owner;
  int nodes = m;
  for (VertexId v : h.vertices()) {
    if (at[v].size() > 2) throw std::invalid_argument("vertex lies in more than two edges");
    if (at[v].empty()) continue;
    int b = at[v].size() == 2 ? at[v][1] : nodes++;
    links.push_back({at[v][0], b, h.weight(v)});
    owner.push_back(v);
  }
  std::vector<int> required(m);
  for (int i = 0; i < m; ++i) required[i] = i;
  VertexSet out;
  for (int li : min_weight_edge_cover(nodes, links, required)) out.push_back(owner[li]);
  return make_set(out);
}

VertexSet min_unweighted_3hs(const WeightedHypergraph& h) {
  const auto& edges = h.edges();
  for (const auto& e : edges)
    if (e.size == 0) throw std::invalid_argument("empty edge cannot be hit");
  std::vector<char> in(h.id_space(), 0);
  VertexSet cur;
  std::function<bool(int)> search = [&](int budget) {
    const HyperEdge* open = nullptr;
    for (const auto& e : edges) {
      bool hit = false;
      for (VertexId x : e) hit = hit || in[x];
      if (!hit && (!open || e.size < open->size)) open = &e;
    }
    if (!open) return true;
    if (budget == 0) return false;
    for (VertexId x : *open) {
      in[x] = 1;
      cur.push_back(x);
      if (search(budget - 1)) return true;
      cur.pop_back();
      in[x] = 0;
    }
    return false;
  };
  for (int t = 0;; ++t)
    if (search(t)) return make_set(cur);
}

}  // namespace wfpt

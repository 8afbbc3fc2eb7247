#include <queue>
#include <stdexcept>

#include "wfpt/wvc.hpp"

namespace wfpt {

namespace {

struct FlowArc {
  int to;
  Weight cap;
};

class MaxFlow {
 public:
  explicit MaxFlow(int n) : head_(n) {}

  void add(int u, int v, const Weight& cap) {
    head_[u].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({v, cap});
    head_[v].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({u, Weight(0)});
  }

  // Edmonds-Karp; terminates for rational capacities.
  void run(int s, int t) {
    const int n = static_cast<int>(head_.size());
    while (true) {
      std::vector<int> via(n, -1);
      std::vector<char> seen(n, 0);
      std::queue<int> q;
      q.push(s);
      seen[s] = 1;
      while (!q.empty() && !seen[t]) {
        int u = q.front();
        q.pop();
        for (int id : head_[u]) {
          const auto& a = arcs_[id];
          if (a.cap.sign() > 0 && !seen[a.to]) {
            seen[a.to] = 1;
            via[a.to] = id;
            q.push(a.to);
          }
        }
      }
      if (!seen[t]) return;
      Weight push;
      bool first = true;
      for (int x = t; x != s; x = arcs_[via[x] ^ 1].to)
        if (first || arcs_[via[x]].cap < push) {
          push = arcs_[via[x]].cap;
          first = false;
        }
      for (int x = t; x != s; x = arcs_[via[x] ^ 1].to) {
        arcs_[via[x]].cap -= push;
        arcs_[via[x] ^ 1].cap += push;
      }
    }
  }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int id : head_[u])
        if (arcs_[id].cap.sign() > 0 && !seen[arcs_[id].to]) {
          seen[arcs_[id].to] = 1;
          q.push(arcs_[id].to);
        }
    }
    return seen;
  }

 private:
  std::vector<std::vector<int>> head_;
  std::vector<FlowArc> arcs_;
};

}  // namespace

VertexSet bipartite_min_weight_vc(const WeightedGraph& g) {
  const int n = g.id_space();
  std::vector<int> side(n, -1);
  for (VertexId s : g.vertices()) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (VertexId u : g.neighbors(v)) {
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          q.push(u);
        } else if (side[u] == side[v]) {
          throw std::invalid_argument("graph is not bipartite");
        }
      }
    }
  }
  const int source = n, sink = n + 1;
  MaxFlow flow(n + 2);
  Weight infinite = g.total_weight(g.vertices()) + Weight(1);
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == 0) continue;
    if (side[v] == 0) {
      flow.add(source, v, g.weight(v));
      for (VertexId u : g.neighbors(v)) flow.add(v, u, infinite);
    } else {
      flow.add(v, sink, g.weight(v));
    }
  }
  flow.run(source, sink);
  auto reach = flow.reachable(source);
  VertexSet cover;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == 0) continue;
    if ((side[v] == 0 && !reach[v]) || (side[v] == 1 && reach[v])) cover.push_back(v);
  }
  return cover;
}

}  // namespace wfpt

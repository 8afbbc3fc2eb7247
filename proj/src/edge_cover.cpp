#include "wfpt/edge_cover.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

namespace wfpt {

std::vector<int> min_weight_edge_cover(int num_nodes, const std::vector<Link>& links,
                                       const std::vector<int>& required) {
  std::vector<std::vector<int>> incident(num_nodes);
  std::vector<int> parent(num_nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < static_cast<int>(links.size()); ++i) {
    const auto& l = links[i];
    if (l.a < 0 || l.a >= num_nodes || l.b < 0 || l.b >= num_nodes)
      throw std::invalid_argument("link endpoint out of range");
    incident[l.a].push_back(i);
    if (l.b != l.a) incident[l.b].push_back(i);
    parent[find(l.a)] = find(l.b);
  }
  std::vector<int> req = required;
  std::sort(req.begin(), req.end());
  req.erase(std::unique(req.begin(), req.end()), req.end());
  for (int r : req)
    if (incident[r].empty()) throw InfeasibleError("node " + std::to_string(r) + " cannot be covered");

  std::vector<std::vector<int>> groups;
  std::vector<int> group_of(num_nodes, -1);
  for (int r : req) {
    int root = find(r);
    if (group_of[root] < 0) {
      group_of[root] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[group_of[root]].push_back(r);
  }

  std::vector<int> chosen;
  std::vector<int> bit(num_nodes, -1);
  for (const auto& group : groups) {
    const int m = static_cast<int>(group.size());
    if (m > 26) throw std::invalid_argument("edge cover component too large");
    for (int i = 0; i < m; ++i) bit[group[i]] = i;
    const std::size_t full = (std::size_t{1} << m) - 1;
    std::vector<std::optional<Weight>> best(full + 1);
    std::vector<int> via_link(full + 1, -1);
    std::vector<std::size_t> via_prev(full + 1, 0);
    best[0] = Weight(0);
    for (std::size_t mask = 0; mask < full; ++mask) {
      if (!best[mask]) continue;
      int first = 0;
      while (mask >> first & 1) ++first;
      for (int li : incident[group[first]]) {
        const auto& l = links[li];
        std::size_t next = mask;
        if (bit[l.a] >= 0) next |= std::size_t{1} << bit[l.a];
        if (bit[l.b] >= 0) next |= std::size_t{1} << bit[l.b];
        Weight cand = *best[mask] + l.w;
        if (!best[next] || cand < *best[next]) {
          best[next] = cand;
          via_link[next] = li;
          via_prev[next] = mask;
        }
      }
    }
    for (std::size_t mask = full; mask != 0; mask = via_prev[mask]) chosen.push_back(via_link[mask]);
    for (int i = 0; i < m; ++i) bit[group[i]] = -1;
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  return chosen;
}

}  // namespace wfpt

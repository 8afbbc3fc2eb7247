#include "wfpt/wiob.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace wfpt {

VertexSet OutTree::vertices() const {
  VertexSet out{root};
  for (const auto& [c, p] : parent) out.push_back(c);
  return make_set(out);
}

VertexSet OutTree::internal() const {
  VertexSet out;
  for (const auto& [c, p] : parent) out.push_back(p);
  return make_set(out);
}

VertexSet OutTree::leaves() const { return set_difference(vertices(), internal()); }

bool is_out_tree(const WeightedDigraph& g, const OutTree& t) {
  if (!g.contains(t.root) || t.parent.count(t.root)) return false;
  for (const auto& [c, p] : t.parent)
    if (!g.contains(c) || !g.has_arc(p, c)) return false;
  for (const auto& [c, p] : t.parent) {
    VertexId x = c;
    std::size_t steps = 0;
    while (x != t.root) {
      auto it = t.parent.find(x);
      if (it == t.parent.end() || ++steps > t.parent.size()) return false;
      x = it->second;
    }
  }
  return true;
}

bool is_out_branching(const WeightedDigraph& g, const OutTree& t) {
  return is_out_tree(g, t) && static_cast<int>(t.parent.size()) + 1 == g.num_vertices();
}

bool has_outbranching(const WeightedDigraph& g, VertexId r) {
  if (!g.contains(r)) return false;
  std::vector<char> seen(g.id_space(), 0);
  std::vector<VertexId> stack{r};
  seen[r] = 1;
  int count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId x : g.out(v))
      if (!seen[x]) {
        seen[x] = 1;
        ++count;
        stack.push_back(x);
      }
  }
  return count == g.num_vertices();
}

namespace {

struct StateHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& s) const {
    return std::hash<std::uint64_t>()(s.first * 0x9E3779B97F4A7C15ULL ^ s.second);
  }
};

class ITreeSearch {
 public:
  ITreeSearch(const WeightedDigraph& g, const Weight& W, int k, SolveStats* stats)
      : g_(g), W_(W), k_(k), stats_(stats) {
    for (VertexId v : g.vertices()) by_weight_.push_back(v);
    std::sort(by_weight_.begin(), by_weight_.end(),
              [&](VertexId a, VertexId b) { return g.weight(a) > g.weight(b) || (g.weight(a) == g.weight(b) && a < b); });
  }

  std::optional<OutTree> run(VertexId r) {
    tree_ = OutTree{r, {}};
    if (go(bit(r), 0, Weight(0))) return tree_;
    return std::nullopt;
  }

 private:
  static std::uint64_t bit(VertexId v) { return std::uint64_t{1} << v; }

  bool go(std::uint64_t t, std::uint64_t in, const Weight& w) {
    if (stats_) ++stats_->nodes;
    int ni = std::popcount(in);
    int nt = std::popcount(t);
    if (ni == k_ && nt - ni <= k_ && w >= W_) return true;
    if (ni > k_ || nt - ni > k_ || nt >= 2 * k_) return false;
    // Best case: the heaviest vertices not yet internal fill the remaining slots.
    Weight bound = w;
    int room = k_ - ni;
    for (VertexId v : by_weight_) {
      if (room == 0) break;
      if (in & bit(v)) continue;
      bound += g_.weight(v);
      --room;
    }
    if (bound < W_) return false;
    if (!failed_.insert({t, in}).second) return false;
    for (VertexId u : g_.vertices()) {
      if (!(t & bit(u))) continue;
      bool adds_internal = !(in & bit(u));
      if (adds_internal && ni == k_) continue;
      for (VertexId x : g_.out(u)) {
        if (t & bit(x)) continue;
        tree_.parent[x] = u;
        if (go(t | bit(x), in | bit(u), adds_internal ? w + g_.weight(u) : w)) return true;
        tree_.parent.erase(x);
      }
    }
    return false;
  }

  const WeightedDigraph& g_;
  Weight W_;
  int k_;
  SolveStats* stats_;
  std::vector<VertexId> by_weight_;
  std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, StateHash> failed_;
  OutTree tree_;
};

const ITreeEngine& engine_or_default(const ITreeEngine& e) {
  static const ITreeEngine fallback = [](const WeightedDigraph& g, VertexId r, const Weight& W, int k) {
    return weighted_k_itree(g, r, W, k);
  };
  return e ? e : fallback;
}

}  // namespace

std::optional<OutTree> weighted_k_itree(const WeightedDigraph& g, VertexId r, const Weight& W, int k,
                                        SolveStats* stats) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (g.id_space() > 64) throw std::invalid_argument("k-ITree search supports at most 64 vertex ids");
  if (!g.contains(r)) throw std::invalid_argument("root is not a vertex");
  ITreeSearch s(g, W, k, stats);
  return s.run(r);
}

OutTree extend_to_outbranching(const WeightedDigraph& g, const OutTree& t) {
  if (!is_out_tree(g, t)) throw std::invalid_argument("not an out-tree of the graph");
  if (!has_outbranching(g, t.root)) throw std::invalid_argument("graph has no out-branching at this root");
  OutTree out = t;
  std::vector<char> inside(g.id_space(), 0);
  for (VertexId v : t.vertices()) inside[v] = 1;
  // Tree vertices in breadth-first order from the root.
  std::map<VertexId, VertexSet> children;
  for (const auto& [c, p] : t.parent) children[p].push_back(c);
  std::deque<VertexId> order{t.root};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (VertexId c : children[order[i]]) order.push_back(c);
  std::deque<VertexId> queue(order.begin(), order.end());
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId x : g.out(u))
      if (!inside[x]) {
        inside[x] = 1;
        out.parent[x] = u;
        queue.push_back(x);
      }
  }
  return out;
}

std::optional<OutTree> solve_k_wiob(const WeightedDigraph& g, const Weight& W, int k, const ITreeEngine& engine) {
  const ITreeEngine& itree = engine_or_default(engine);
  const int n = g.num_vertices();
  // With k >= W any out-branching of weight >= W qualifies.
  int top = Weight(k) >= W ? n - 1 : std::min(k, n - 1);
  for (VertexId r : g.vertices()) {
    if (!has_outbranching(g, r)) continue;
    for (int kk = 1; kk <= top; ++kk)
      if (auto t = itree(g, r, W, kk)) return extend_to_outbranching(g, *t);
  }
  return std::nullopt;
}

bool max_internal_at_least(const WeightedDigraph& g, int c, const ITreeEngine& engine) {
  if (c < 1) throw std::invalid_argument("c must be at least 1");
  if (c > g.num_vertices() - 1) return false;
  const ITreeEngine& itree = engine_or_default(engine);
  for (VertexId r : g.vertices())
    if (has_outbranching(g, r) && itree(g, r, Weight(0), c)) return true;
  return false;
}

DriverResult<OutTree> solve_wiob_driver(const WeightedDigraph& g, const Weight& W, const ITreeEngine& engine) {
  DriverResult<OutTree> result;
  for (int k = 1;; ++k) {
    result.achieved_k = k;
    if (auto t = solve_k_wiob(g, W, k, engine)) {
      if (!is_out_branching(g, *t)) throw ContractViolation("wiob: solver returned a non-solution");
      Weight w = g.total_weight(t->internal());
      if (w < W) throw ContractViolation("wiob: solver broke the weight bound");
      result.outcome = Solution<OutTree>{std::move(*t), std::move(w)};
      return result;
    }
    if (!max_internal_at_least(g, k + 1, engine)) return result;
  }
}

}  // namespace wfpt

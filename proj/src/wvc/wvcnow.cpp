#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "common.hpp"
#include "wfpt/wvc.hpp"

namespace wfpt {

namespace {

using detail::Branch;
using detail::fire;
using detail::Pattern;
using detail::take_all;

// Branching rules for the unbounded-weight variant. Subproblems go through
// `recurse`, which the stored-solution variant overrides.
class NoWeightRules {
 public:
  NoWeightRules(int threshold, SolveStats* stats) : threshold_(threshold), stats_(stats) {}
  virtual ~NoWeightRules() = default;

  virtual std::optional<VertexSet> recurse(const WeightedGraph& g, int k) {
    if (stats_) ++stats_->nodes;
    return apply_rules(g, k);
  }

  std::optional<VertexSet> apply_rules(const WeightedGraph& g, int k) {
    if (k < 0) {
      fire(stats_, "now.r1");
      return std::nullopt;
    }
    if (g.num_edges() == 0) {
      fire(stats_, "now.r2");
      return VertexSet{};
    }
    if (auto c = detail::find_easy_component(g, threshold_)) {
      fire(stats_, c->low_degree ? "now.r3" : "now.r4");
      if (k - 1 < 0) return std::nullopt;
      WeightedGraph h = induced_subgraph(g, c->vertices);
      VertexSet u = c->low_degree ? min_weight_vc_low_degree(h) : *exact_min_weight_vc(h);
      auto rest = recurse(g.without(c->vertices), k - 1);
      if (!rest) return std::nullopt;
      return set_union(*rest, u);
    }

    int maxdeg = g.max_degree();
    bool cubic = maxdeg == 3;
    if (cubic)
      for (VertexId v : g.vertices())
        if (g.degree(v) != 0 && g.degree(v) != 3) cubic = false;
    if (maxdeg >= 4 || cubic) {
      fire(stats_, "now.r5");
      VertexId v = g.max_degree_vertex();
      const VertexSet& nv = g.neighbors(v);
      return lightest(g, k, {Branch{{v}, 1}, Branch{nv, std::max(static_cast<int>(nv.size()), 4)}});
    }

    if (auto r = leaf_rules(g, k)) return *r;

    if (VertexId v = detail::find_dominating(g); v >= 0) {
      fire(stats_, "now.r8");
      return lightest(g, k, {Branch{{v}, 1}});
    }

    if (auto t = detail::find_thin_triangle(g)) {
      fire(stats_, "now.r9");
      auto [r, a, b] = *t;
      VertexId v = g.degree(a) == 3 || g.degree(b) != 3 ? a : b;
      return vn_branch(g, k, v);
    }

    if (auto t = detail::find_cubic_triangle(g)) {
      fire(stats_, "now.r10");
      return lightest(g, k, {Branch{{(*t)[0]}, 1}, take_all(detail::cubic_triangle_set(g, *t))});
    }

    if (auto p = detail::find_path_into_cubic(g)) {
      fire(stats_, "now.r11");
      return vn_branch(g, k, (*p)[0]);
    }

    if (auto r = pattern_rules(g, k)) return *r;

    fire(stats_, "now.fallback");
    if (stats_) ++stats_->fallback_branches;
    return lightest(g, k, detail::fallback_branches(g));
  }

 protected:
  std::optional<VertexSet> lightest(const WeightedGraph& g, int k, const std::vector<Branch>& bs) {
    std::optional<VertexSet> best;
    Weight best_w;
    for (const auto& b : bs) {
      auto sub = recurse(g.without(b.take), k - b.dec);
      if (!sub) continue;
      VertexSet s = set_union(*sub, b.take);
      Weight w = g.total_weight(s);
      if (!best || w < best_w) {
        best = std::move(s);
        best_w = w;
      }
    }
    return best;
  }

  std::optional<VertexSet> vn_branch(const WeightedGraph& g, int k, VertexId v) {
    return lightest(g, k, {Branch{{v}, 1}, take_all(g.neighbors(v))});
  }

  // Degree-3 vertex reached from u (not through v) along degree-2 vertices.
  VertexId chain_end(const WeightedGraph& g, VertexId u, VertexId v) {
    for (VertexId y : g.neighbors(u)) {
      if (y == v) continue;
      VertexId prev = u, cur = y;
      while (g.degree(cur) == 2) {
        VertexId next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
        prev = cur;
        cur = next;
        if (cur == u) break;
      }
      if (cur != u && g.degree(cur) == 3) return cur;
    }
    return -1;
  }

  std::optional<std::optional<VertexSet>> leaf_rules(const WeightedGraph& g, int k) {
    std::vector<std::pair<VertexId, VertexId>> leaves;  // (leaf, neighbour)
    for (VertexId v : g.vertices())
      if (g.degree(v) == 1) leaves.emplace_back(v, g.neighbors(v)[0]);
    if (leaves.empty()) return std::nullopt;
    auto r_branch = [&](const char* rule, VertexId r) {
      fire(stats_, rule);
      return std::optional<std::optional<VertexSet>>(vn_branch(g, k, r));
    };
    for (auto [v, u] : leaves) {
      int leaf_nbrs = 0;
      for (VertexId y : g.neighbors(u))
        if (g.degree(y) == 1) ++leaf_nbrs;
      if (g.degree(u) != 2 && leaf_nbrs < 2) continue;
      if (VertexId r = chain_end(g, u, v); r >= 0) return r_branch("now.r6", r);
    }
    for (auto [v, u] : leaves)
      if (VertexId r = chain_end(g, u, v); r >= 0) return r_branch("now.r7", r);
    return std::nullopt;
  }

  std::optional<std::optional<VertexSet>> pattern_rules(const WeightedGraph& g, int k) {
    auto pats = detail::find_patterns(g);
    if (pats.empty()) return std::nullopt;
    auto deg = [&](VertexId y) { return g.degree(y); };
    auto w = [&](VertexId y) -> const Weight& { return g.weight(y); };
    auto other = [&](VertexId y, VertexId not_this) {
      return g.neighbors(y)[0] == not_this ? g.neighbors(y)[1] : g.neighbors(y)[0];
    };
    auto done = [&](const char* rule, const std::vector<Branch>& bs) {
      fire(stats_, rule);
      return std::optional<std::optional<VertexSet>>(lightest(g, k, bs));
    };
    for (const auto& p : pats)
      if (deg(p.b) == 2 && g.adjacent(p.b, p.v))
        return done("now.r12", {Branch{{p.v}, 1}, take_all(g.neighbors(p.v))});
    for (const auto& p : pats)
      if (deg(p.b) == 2 && deg(p.c) == 2 && w(p.x) >= w(p.b) + w(p.c))
        return done("now.r13", {Branch{{p.v}, 1},
                                take_all(set_union(g.neighbors(p.v), make_set({p.b, p.c})))});
    for (const auto& p : pats) {
      if (deg(p.b) != 2 || deg(p.c) != 2 || !(w(p.x) < w(p.b) + w(p.c))) continue;
      VertexId bp = other(p.b, p.x), cp = other(p.c, p.x);
      if (bp == cp || g.adjacent(bp, cp) || bp == p.x || cp == p.x) continue;
      return done("now.r14", {take_all(g.neighbors(bp)), take_all(set_union(g.neighbors(cp), {bp})),
                              take_all(make_set({bp, cp, p.x}))});
    }
    for (const auto& p : pats) {
      if (!(w(p.a) >= std::min(w(p.x), w(p.v)))) continue;
      VertexId pp = w(p.a) >= w(p.x) ? p.x : p.v;
      VertexId q = pp == p.x ? p.v : p.x;
      return done("now.r15", {take_all(g.neighbors(q)), take_all(make_set({q, pp}))});
    }
    for (const auto& p : pats)
      if (deg(p.b) == 3 && deg(p.c) == 3 && !g.adjacent(p.b, p.c) && w(p.a) <= w(p.x))
        return done("now.r16", {take_all(g.neighbors(p.b)), take_all(set_union(g.neighbors(p.c), {p.b})),
                                take_all(make_set({p.a, p.b, p.c}))});
    for (const auto& p : pats) {
      if (deg(p.b) != 2 || deg(p.c) != 3) continue;
      if (!(w(p.b) <= w(p.x)) || !(w(p.a) <= w(p.x))) continue;
      VertexId bp = other(p.b, p.x);
      if (bp == p.c || bp == p.v || bp == p.x) continue;
      return done("now.r17", {take_all(g.neighbors(p.c)), take_all(g.neighbors(p.x)),
                              take_all(make_set({p.c, p.x, p.v, bp}))});
    }
    return std::nullopt;
  }

  int threshold_;
  SolveStats* stats_;
};

struct MemoKey {
  std::vector<std::uint64_t> bits;
  int k;
  bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& key) const {
    std::size_t h = std::hash<int>()(key.k);
    for (auto b : key.bits) h ^= std::hash<std::uint64_t>()(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class MemoSearch : public NoWeightRules {
 public:
  explicit MemoSearch(const MemoOptions& o)
      : NoWeightRules(o.brute_force_threshold, o.stats), opts_(o) {}

  std::optional<VertexSet> recurse(const WeightedGraph& g_in, int k) override {
    if (stats_) ++stats_->nodes;
    VertexSet isolated;
    for (VertexId v : g_in.vertices())
      if (g_in.degree(v) == 0) isolated.push_back(v);
    WeightedGraph g = g_in.without(isolated);

    auto comps = connected_components(g);
    const bool connected = comps.size() == 1;
    MemoKey key;
    if (connected && opts_.use_memo) {
      key = make_key(g, k);
      if (auto it = memo_.find(key); it != memo_.end()) {
        fire(stats_, "memo.r1");
        ++stats_->memo_hits;
        return it->second;
      }
    }
    const long delta = g.max_degree();
    if (static_cast<long>(g.num_edges()) > delta * k) {
      fire(stats_, "memo.r2");
      return std::nullopt;
    }
    if (delta >= 5) {
      fire(stats_, "memo.r3");
      VertexId v = g.max_degree_vertex();
      return lightest(g, k, {Branch{{v}, 1}, take_all(g.neighbors(v))});
    }
    for (const auto& c : comps) {
      int high = 0;
      for (VertexId v : c)
        if (g.degree(v) >= 3) ++high;
      if (high <= 1 || static_cast<int>(c.size()) <= opts_.small_component) {
        fire(stats_, "memo.r4");
        return apply_rules(g, k);
      }
    }
    if (comps.size() > 1) {
      fire(stats_, "memo.r6");
      int l = static_cast<int>(comps.size());
      int kt = k - 3 * (l - 1);
      if (kt < 3) return std::nullopt;
      VertexSet all;
      for (const auto& c : comps) {
        auto sub = recurse(induced_subgraph(g, c), kt);
        if (!sub) return std::nullopt;
        all.insert(all.end(), sub->begin(), sub->end());
      }
      return make_set(all);
    }
    std::optional<VertexSet> result;
    if (delta >= 4) {
      fire(stats_, "memo.r7");
      VertexId v = g.max_degree_vertex();
      result = lightest(g, k, {Branch{{v}, 1}, Branch{g.neighbors(v), 4}});
    } else {
      fire(stats_, "memo.r8");
      result = apply_rules(g, k);
    }
    if (connected && opts_.use_memo) memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  static MemoKey make_key(const WeightedGraph& g, int k) {
    MemoKey key{std::vector<std::uint64_t>((g.id_space() + 63) / 64, 0), k};
    for (VertexId v : g.vertices()) key.bits[v / 64] |= std::uint64_t{1} << (v % 64);
    return key;
  }

  MemoOptions opts_;
  std::unordered_map<MemoKey, std::optional<VertexSet>, MemoKeyHash> memo_;
};

void check_weights(const WeightedGraph& g) {
  for (VertexId v : g.vertices())
    if (g.weight(v) < Weight(1)) throw std::invalid_argument("vertex weights must be at least 1");
}

}  // namespace

VertexSet solve_k_wvcnow(const WeightedGraph& g, int k, const WvcOptions& opts) {
  check_weights(g);
  NoWeightRules rules(opts.brute_force_threshold, opts.stats);
  if (auto r = rules.recurse(g, k)) return *r;
  // Every branch ran out of budget: the non-isolated vertices still cover.
  VertexSet all;
  for (VertexId v : g.vertices())
    if (g.degree(v) > 0) all.push_back(v);
  return all;
}

std::optional<VertexSet> solve_k_wvcnow_memo(const WeightedGraph& g, int k, const MemoOptions& opts) {
  check_weights(g);
  SolveStats local;
  MemoOptions o = opts;
  if (!o.stats) o.stats = &local;
  MemoSearch search(o);
  return search.recurse(g, k);
}

}  // namespace wfpt

#include <stdexcept>

#include "common.hpp"
#include "wfpt/wvc.hpp"

namespace wfpt {

namespace {

using detail::Branch;
using detail::fire;
using detail::take_all;

class WvcSearch {
 public:
  explicit WvcSearch(const WvcOptions& o) : opts_(o) {}

  // `debt` is set after a cubic v/N(v) branching that spent one more unit
  // of k than it chose on the N(v) side.
  std::optional<VertexSet> run(const WeightedGraph& g, const Weight& W, int k, bool debt) {
    if (opts_.stats) ++opts_.stats->nodes;
    if (W.sign() < 0 || k < 0) {
      fire(opts_.stats, "wvc.r1");
      return std::nullopt;
    }
    if (g.num_edges() == 0) {
      fire(opts_.stats, "wvc.r2");
      if (debt && opts_.stats) ++opts_.stats->cubic_debt_violations;
      return VertexSet{};
    }
    if (auto easy = detail::find_easy_component(g, opts_.brute_force_threshold))
      return solve_component(g, W, k, debt, *easy);

    // Rule 5: high degree, or the graph is cubic apart from isolated vertices.
    int maxdeg = g.max_degree();
    bool cubic = maxdeg == 3;
    if (cubic)
      for (VertexId v : g.vertices())
        if (g.degree(v) != 0 && g.degree(v) != 3) cubic = false;
    if (maxdeg >= 4 || cubic) {
      fire(opts_.stats, "wvc.r5");
      bool next_debt = debt;
      if (cubic) {
        if (debt && opts_.stats) ++opts_.stats->cubic_debt_violations;
        next_debt = true;
      }
      VertexId v = g.max_degree_vertex();
      if (auto r = apply(g, W, k, Branch{{v}, 1}, cubic ? false : debt))
        return r;
      const VertexSet& nv = g.neighbors(v);
      int dec = std::max(static_cast<int>(nv.size()), 4);
      return apply(g, W, k, Branch{nv, dec}, next_debt);
    }

    if (VertexId v = detail::find_leaf(g); v >= 0) return leaf_rule(g, W, k, debt, v);

    if (VertexId v = detail::find_dominating(g); v >= 0) {
      fire(opts_.stats, "wvc.r7");
      return apply(g, W, k, Branch{{v}, 1}, debt);
    }

    if (auto t = detail::find_thin_triangle(g)) {
      auto [r, v, u] = *t;
      Weight wr = g.weight(r);
      if (g.weight(v) > wr && g.weight(u) > wr) {
        fire(opts_.stats, "wvc.r8");
        WeightedGraph h = g.without({r});
        h.set_weight(v, g.weight(v) - wr);
        h.set_weight(u, g.weight(u) - wr);
        auto res = run(h, W - wr - wr, k, debt);
        if (!res) return std::nullopt;
        if (!(set_contains(*res, v) && set_contains(*res, u))) return set_union(*res, {r});
        return res;
      }
    }

    if (auto t = detail::find_cubic_triangle(g)) {
      fire(opts_.stats, "wvc.r9");
      return branch(g, W, k, debt, {Branch{{(*t)[0]}, 1}, take_all(detail::cubic_triangle_set(g, *t))});
    }

    if (auto p = detail::find_path_into_cubic(g)) {
      fire(opts_.stats, "wvc.r10");
      VertexId v = (*p)[0];
      return branch(g, W, k, debt, {Branch{{v}, 1}, take_all(g.neighbors(v))});
    }

    if (auto r = pattern_rules(g, W, k, debt)) return *r;

    fire(opts_.stats, "wvc.fallback");
    if (opts_.stats) ++opts_.stats->fallback_branches;
    return branch(g, W, k, debt, detail::fallback_branches(g));
  }

 private:
  std::optional<VertexSet> apply(const WeightedGraph& g, const Weight& W, int k, const Branch& b,
                                 bool debt) {
    auto sub = run(g.without(b.take), W - g.total_weight(b.take), k - b.dec, debt);
    if (!sub) return std::nullopt;
    return set_union(*sub, b.take);
  }

  std::optional<VertexSet> branch(const WeightedGraph& g, const Weight& W, int k, bool debt,
                                  const std::vector<Branch>& bs) {
    for (const auto& b : bs)
      if (auto r = apply(g, W, k, b, debt)) return r;
    return std::nullopt;
  }

  std::optional<VertexSet> solve_component(const WeightedGraph& g, const Weight& W, int k,
                                           bool debt, const detail::EasyComponent& c) {
    fire(opts_.stats, c.low_degree ? "wvc.r3" : "wvc.r4");
    // The recursive call would reject k - 1 < 0 before looking at the cover.
    if (k - 1 < 0) {
      if (opts_.stats) ++opts_.stats->nodes;
      return std::nullopt;
    }
    WeightedGraph h = induced_subgraph(g, c.vertices);
    VertexSet u;
    if (c.low_degree) {
      u = min_weight_vc_low_degree(h);
    } else {
      auto exact = exact_min_weight_vc(h, W);
      if (!exact) {
        if (opts_.stats) ++opts_.stats->nodes;
        return std::nullopt;
      }
      u = *exact;
    }
    bool paid = c.vertices.size() >= 5;
    auto rest = run(g.without(c.vertices), W - g.total_weight(u), k - 1, debt && !paid);
    if (!rest) return std::nullopt;
    return set_union(*rest, u);
  }

  std::optional<VertexSet> leaf_rule(const WeightedGraph& g, const Weight& W, int k, bool debt,
                                     VertexId v) {
    VertexId u = g.neighbors(v)[0];
    const Weight& wv = g.weight(v);
    const Weight& wu = g.weight(u);
    if (wv >= wu) {
      fire(opts_.stats, "wvc.r6.1");
      auto sub = run(g.without(make_set({v, u})), W - wu, k - 1, debt);
      if (!sub) return std::nullopt;
      return set_union(*sub, {u});
    }
    if (g.degree(u) == 2) {
      VertexId r = g.neighbors(u)[0] == v ? g.neighbors(u)[1] : g.neighbors(u)[0];
      Weight wr2 = g.weight(r) - (wu - wv);
      if (wr2.sign() <= 0) {
        fire(opts_.stats, "wvc.r6.2b");
        auto sub = run(g.without(make_set({v, u, r})), W - wv - g.weight(r), k - 1, debt);
        if (!sub) return std::nullopt;
        return set_union(*sub, make_set({v, r}));
      }
      fire(opts_.stats, "wvc.r6.2c");
      WeightedGraph h = g.without(make_set({v, u}));
      h.set_weight(r, wr2);
      auto sub = run(h, W - wu, k - 1, debt);
      if (!sub) return std::nullopt;
      return set_union(*sub, {set_contains(*sub, r) ? v : u});
    }
    fire(opts_.stats, "wvc.r6.3");
    WeightedGraph h = g.without({v});
    h.set_weight(u, wu - wv);
    auto sub = run(h, W - wv, k, debt);
    if (!sub) return std::nullopt;
    if (!set_contains(*sub, u)) return set_union(*sub, {v});
    return sub;
  }

  // Degree-2 neighbourhood configurations around x - a - v.
  std::optional<std::optional<VertexSet>> pattern_rules(const WeightedGraph& g, const Weight& W,
                                                        int k, bool debt) {
    auto pats = detail::find_patterns(g);
    if (pats.empty()) return std::nullopt;
    auto deg = [&](VertexId y) { return g.degree(y); };
    auto done = [&](const char* rule, const std::vector<Branch>& bs) {
      fire(opts_.stats, rule);
      return std::optional<std::optional<VertexSet>>(branch(g, W, k, debt, bs));
    };
    for (const auto& p : pats)
      if (deg(p.b) == 2 && deg(p.v) == 3 && (!g.adjacent(p.v, p.b) || deg(p.c) == 2))
        return done("wvc.r11", {Branch{{p.v}, 1}, take_all(g.neighbors(p.v))});
    for (const auto& p : pats)
      if (deg(p.b) == 2 && g.adjacent(p.b, p.v) && deg(p.v) == 3 && deg(p.c) == 3)
        return done("wvc.r12", {Branch{{p.c}, 1}, take_all(g.neighbors(p.c))});
    auto full = [&](const Pattern& p) { return deg(p.b) == 3 && deg(p.c) == 3 && deg(p.v) == 3; };
    auto outer = [&](const Pattern& p) {
      VertexSet nv;
      for (VertexId y : g.neighbors(p.v))
        if (y != p.a) nv.push_back(y);
      return nv;
    };
    for (const auto& p : pats)
      if (full(p) && outer(p) == make_set({p.b, p.c}))
        return done("wvc.r13", {take_all(make_set({p.x, p.v})), take_all(g.neighbors(p.x))});
    for (const auto& p : pats) {
      if (!full(p)) continue;
      VertexSet nv = outer(p);
      if (set_contains(nv, p.b) && !set_contains(nv, p.c))
        return done("wvc.r14", {take_all(g.neighbors(p.b)),
                                take_all(set_union(g.neighbors(p.c), {p.b})),
                                take_all(make_set({p.b, p.c}))});
    }
    for (const auto& p : pats) {
      if (!full(p)) continue;
      VertexSet nv = outer(p);
      if (set_contains(nv, p.b) || set_contains(nv, p.c)) continue;
      if (g.adjacent(p.b, nv[0]) || g.adjacent(p.b, nv[1]))
        return done("wvc.r15", {Branch{{p.b}, 1}, take_all(g.neighbors(p.b))});
    }
    for (const auto& p : pats) {
      if (!full(p)) continue;
      VertexSet nv = outer(p);
      if (set_contains(nv, p.b) || set_contains(nv, p.c)) continue;
      VertexSet four = make_set({p.b, p.c, nv[0], nv[1]});
      bool independent = true;
      for (VertexId s : four)
        for (VertexId t : four)
          if (s < t && g.adjacent(s, t)) independent = false;
      if (!independent) continue;
      VertexId v2 = deg(nv[0]) == 3 || deg(nv[1]) != 3 ? nv[0] : nv[1];
      return done("wvc.r16", {take_all(g.neighbors(p.b)),
                              take_all(set_union(g.neighbors(v2), {p.b})),
                              take_all(set_union(g.neighbors(p.c), make_set({p.b, v2}))),
                              take_all(make_set({p.b, v2, p.c}))});
    }
    return std::nullopt;
  }

  using Pattern = detail::Pattern;
  WvcOptions opts_;
};

}  // namespace

std::optional<VertexSet> solve_k_wvc(const WeightedGraph& g, const Weight& W, int k,
                                     const WvcOptions& opts) {
  for (VertexId v : g.vertices())
    if (g.weight(v) < Weight(1)) throw std::invalid_argument("vertex weights must be at least 1");
  WvcSearch s(opts);
  return s.run(g, W, k, false);
}

}  // namespace wfpt

#include <algorithm>
#include <stdexcept>

#include "common.hpp"
#include "wfpt/wvc.hpp"

namespace wfpt {

namespace {

using detail::fire;

std::vector<VertexSet> cover_components(const WeightedGraph& g, const VertexSet& u) {
  return connected_components(induced_subgraph(g, u));
}

bool is_triangle(const WeightedGraph& g, const VertexSet& c) {
  return c.size() == 3 && g.adjacent(c[0], c[1]) && g.adjacent(c[1], c[2]) && g.adjacent(c[0], c[2]);
}

std::vector<VertexSet> triangles_of_cover(const WeightedGraph& g, const VertexSet& u) {
  std::vector<VertexSet> out;
  for (auto& c : cover_components(g, u))
    if (is_triangle(g, c)) out.push_back(std::move(c));
  return out;
}

bool bipartite(const WeightedGraph& g) {
  std::vector<int> side(g.id_space(), -1);
  for (VertexId s : g.vertices()) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId x : g.neighbors(v)) {
        if (side[x] < 0) {
          side[x] = 1 - side[v];
          stack.push_back(x);
        } else if (side[x] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<VertexSet> two_subsets(const VertexSet& t) {
  return {VertexSet{t[0], t[1]}, VertexSet{t[0], t[2]}, VertexSet{t[1], t[2]}};
}

class StarSearch {
 public:
  StarSearch(TriangleMap f, bool use_f, SolveStats* stats)
      : f_(std::move(f)), use_f_(use_f), stats_(stats) {}

  std::optional<VertexSet> run(const WeightedGraph& g, const Weight& W, const VertexSet& u) {
    if (stats_) ++stats_->nodes;
    if (W.sign() < 0) return std::nullopt;
    if (bipartite(g)) {
      fire(stats_, "star.r1");
      VertexSet a = bipartite_min_weight_vc(g);
      if (g.total_weight(a) <= W) return a;
      return std::nullopt;
    }
    for (VertexId v : u) {
      bool inside = true;
      for (VertexId x : g.neighbors(v))
        if (!set_contains(u, x)) {
          inside = false;
          break;
        }
      if (inside) {
        fire(stats_, "star.r2");
        return run(g, W, set_difference(u, {v}));
      }
    }
    for (const auto& c : connected_components(g)) {
      if (c.size() < 2 || c.size() > 10) continue;
      fire(stats_, "star.r3");
      WeightedGraph h = induced_subgraph(g, c);
      auto a = exact_min_weight_vc(h, W);
      if (!a) return std::nullopt;
      auto rest = run(g.without(c), W - h.total_weight(*a), set_difference(u, c));
      if (!rest) return std::nullopt;
      return set_union(*rest, *a);
    }
    if (use_f_)
      if (auto r = mapped_triangle_rules(g, W, u)) return *r;

    auto nu = [&](VertexId v) { return set_intersection(g.neighbors(v), u); };
    for (VertexId uu : u) {
      VertexSet nuu = nu(uu);
      if (nuu.size() == 1 && nu(nuu[0]).size() >= 2) {
        fire(stats_, "star.r6");
        return vn(g, W, u, nuu[0]);
      }
    }
    for (VertexId v : u)
      if (nu(v).size() == 1) {
        fire(stats_, "star.r7");
        return vn(g, W, u, v);
      }
    for (VertexId v : u)
      if (nu(v).size() >= 3) {
        fire(stats_, "star.r8");
        return vn(g, W, u, v);
      }
    auto tris = triangles_of_cover(g, u);
    if (!tris.empty()) {
      fire(stats_, "star.r9");
      for (const auto& a : two_subsets(tris.front()))
        if (auto r = take(g, W, u, a)) return r;
      return std::nullopt;
    }
    for (VertexId v : u)
      if (nu(v).size() == 2) {
        fire(stats_, "star.r10");
        return vn(g, W, u, v);
      }
    fire(stats_, "star.fallback");
    if (stats_) ++stats_->fallback_branches;
    return vn(g, W, u, g.max_degree_vertex());
  }

 private:
  std::optional<VertexSet> take(const WeightedGraph& g, const Weight& W, const VertexSet& u,
                                const VertexSet& x) {
    auto sub = run(g.without(x), W - g.total_weight(x), set_difference(u, x));
    if (!sub) return std::nullopt;
    return set_union(*sub, x);
  }

  std::optional<VertexSet> vn(const WeightedGraph& g, const Weight& W, const VertexSet& u, VertexId v) {
    if (auto r = take(g, W, u, {v})) return r;
    return take(g, W, u, g.neighbors(v));
  }

  // Triangles whose assigned path is still a component of G[U].
  std::optional<std::optional<VertexSet>> mapped_triangle_rules(const WeightedGraph& g, const Weight& W,
                                                                const VertexSet& u) {
    auto starred = isolated_triangles(g, u);
    auto paths = p2_components(g, u);
    std::vector<std::pair<VertexSet, VertexSet>> live;
    for (const auto& c : starred) {
      auto it = f_.find(c);
      if (it == f_.end()) continue;
      if (std::find(paths.begin(), paths.end(), it->second) == paths.end()) continue;
      live.emplace_back(c, it->second);
    }
    // Rule 4: a triangle owning its path alone.
    for (const auto& [c, p] : live) {
      int sharing = 0;
      for (const auto& [c2, p2] : live)
        if (p2 == p) ++sharing;
      if (sharing != 1) continue;
      fire(stats_, "star.r4");
      VertexId v = p[0];
      for (const auto& a : two_subsets(c))
        if (auto r = take(g, W, u, set_union(a, {v}))) return std::optional<std::optional<VertexSet>>(r);
      return std::optional<std::optional<VertexSet>>(take(g, W, u, g.neighbors(v)));
    }
    // Rule 5: two triangles sharing a path.
    for (std::size_t i = 0; i < live.size(); ++i)
      for (std::size_t j = i + 1; j < live.size(); ++j) {
        if (live[i].second != live[j].second) continue;
        fire(stats_, "star.r5");
        VertexId v = live[i].second[0];
        for (const auto& a : two_subsets(live[i].first))
          for (const auto& b : two_subsets(live[j].first))
            if (auto r = take(g, W, u, set_union(set_union(a, b), {v})))
              return std::optional<std::optional<VertexSet>>(r);
        return std::optional<std::optional<VertexSet>>(take(g, W, u, g.neighbors(v)));
      }
    return std::nullopt;
  }

  TriangleMap f_;
  bool use_f_;
  SolveStats* stats_;
};

}  // namespace

std::vector<VertexSet> isolated_triangles(const WeightedGraph& g, const VertexSet& u) {
  std::vector<VertexSet> out;
  for (auto& c : triangles_of_cover(g, u)) {
    VertexSet common = set_intersection(set_intersection(g.neighbors(c[0]), g.neighbors(c[1])),
                                        g.neighbors(c[2]));
    if (set_difference(common, u).empty()) out.push_back(std::move(c));
  }
  return out;
}

std::vector<VertexSet> p2_components(const WeightedGraph& g, const VertexSet& u) {
  std::vector<VertexSet> out;
  for (auto& c : cover_components(g, u))
    if (c.size() == 2) out.push_back(std::move(c));
  return out;
}

std::optional<TriangleMap> good_function(const WeightedGraph& g, const VertexSet& u) {
  TriangleMap f;
  auto paths = p2_components(g, u);
  for (const auto& c : isolated_triangles(g, u)) {
    bool found = false;
    for (const auto& p : paths) {
      VertexSet witnesses = set_difference(set_intersection(g.neighbors(p[0]), g.neighbors(p[1])), u);
      for (VertexId y : witnesses)
        for (VertexId t : c)
          if (g.adjacent(y, t)) found = true;
      if (found) {
        f.emplace(c, p);
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return f;
}

GoodMvc preprocess_good_mvc(const WeightedGraph& g, const VertexSet& mvc) {
  if (g.max_degree() > 3) throw std::invalid_argument("good cover preprocessing needs max degree <= 3");
  VertexSet u = make_set(mvc);
  if (!g.is_vertex_cover(u)) throw std::invalid_argument("given set is not a vertex cover");
  if (u.size() != min_unweighted_vc(g).size()) throw std::invalid_argument("given cover is not minimum");
  const long limit = static_cast<long>(g.num_vertices()) * g.num_vertices() + 1;
  for (long iter = 0;; ++iter) {
    if (iter > limit) throw std::logic_error("good cover preprocessing did not converge");
    auto paths = p2_components(g, u);
    bool swapped = false;
    for (const auto& c : isolated_triangles(g, u)) {
      for (VertexId v : c) {
        VertexSet out = set_difference(g.neighbors(v), u);
        if (out.size() != 1) throw std::invalid_argument("given cover is not minimum");
        VertexId w = out[0];
        VertexSet rest = set_difference(g.neighbors(w), {v});
        if (std::find(paths.begin(), paths.end(), rest) != paths.end()) continue;
        u = set_union(set_difference(u, {v}), {w});
        swapped = true;
        break;
      }
      if (swapped) break;
    }
    if (!swapped) break;
  }
  auto f = good_function(g, u);
  if (!f) throw std::logic_error("preprocessed cover is not good");
  return GoodMvc{u, *f};
}

std::optional<VertexSet> solve_wvc_star(const WeightedGraph& g, const Weight& W, const VertexSet& mvc,
                                        SolveStats* stats) {
  for (VertexId v : g.vertices())
    if (g.weight(v) < Weight(1)) throw std::invalid_argument("vertex weights must be at least 1");
  VertexSet u = make_set(mvc);
  if (!g.is_vertex_cover(u)) throw std::invalid_argument("given set is not a vertex cover");
  TriangleMap f;
  bool use_f = g.max_degree() <= 3;
  if (use_f) {
    GoodMvc good = preprocess_good_mvc(g, u);
    u = good.cover;
    f = good.f;
  }
  StarSearch search(std::move(f), use_f, stats);
  return search.run(g, W, u);
}

}  // namespace wfpt

#include "doctest.h"
#include "support/gen.hpp"
#include "wfpt/oracles.hpp"
#include "wfpt/wiob.hpp"

using namespace wfpt;
using namespace wfpt::testing;

namespace {

WeightedDigraph digraph(int n, std::initializer_list<Edge> arcs, long w = 1) {
  WeightedDigraph g(n);
  for (int v = 0; v < n; ++v) g.add_vertex(v, Weight(w));
  for (const auto& [a, b] : arcs) g.add_arc(a, b);
  return g;
}

WeightedDigraph path(int n) {
  WeightedDigraph g(n);
  for (int v = 0; v < n; ++v) g.add_vertex(v, Weight(1));
  for (int v = 0; v + 1 < n; ++v) g.add_arc(v, v + 1);
  return g;
}

}  // namespace

TEST_CASE("out-tree structure") {
  OutTree t{0, {{1, 0}, {2, 0}, {3, 1}}};
  CHECK(t.vertices() == VertexSet{0, 1, 2, 3});
  CHECK(t.internal() == VertexSet{0, 1});
  CHECK(t.leaves() == VertexSet{2, 3});
  WeightedDigraph g = digraph(4, {{0, 1}, {0, 2}, {1, 3}});
  CHECK(is_out_tree(g, t));
  CHECK(is_out_branching(g, t));
  CHECK_FALSE(is_out_tree(g, OutTree{0, {{1, 0}, {3, 2}}}));
  CHECK_FALSE(is_out_branching(g, OutTree{0, {{1, 0}}}));
  OutTree single{2, {}};
  CHECK(single.internal().empty());
  CHECK(single.leaves() == VertexSet{2});
}

TEST_CASE("reachability") {
  CHECK(has_outbranching(path(3), 0));
  CHECK_FALSE(has_outbranching(path(3), 2));
  CHECK(has_outbranching(path(1), 0));
}

TEST_CASE("weighted_k_itree examples") {
  WeightedDigraph star = digraph(3, {{0, 1}, {0, 2}});
  auto t = weighted_k_itree(star, 0, Weight(1), 1);
  REQUIRE(t);
  CHECK(t->internal() == VertexSet{0});
  CHECK(t->leaves().size() <= 1);
  CHECK(is_out_tree(star, *t));
  CHECK_FALSE(weighted_k_itree(star, 0, Weight(2), 1));
}

TEST_CASE("weighted_k_itree feasibility matches out-tree enumeration") {
  Rng r(71);
  for (int i = 0; i < 60; ++i) {
    const int n = r.uniform(2, 7);
    WeightedDigraph g = random_digraph(r, n, 0.35, 1, 5);
    auto rep = brute_max_wiob(g, Weight(0), n);
    for (const auto& [root, internal] : rep.realised) {
      auto t = weighted_k_itree(g, root, g.total_weight(internal), static_cast<int>(internal.size()));
      CHECK(t.has_value());
      if (t) {
        CHECK(t->root == root);
        CHECK(is_out_tree(g, *t));
        CHECK(static_cast<int>(t->internal().size()) == static_cast<int>(internal.size()));
        CHECK(t->leaves().size() <= internal.size());
        CHECK(g.total_weight(t->internal()) >= g.total_weight(internal));
      }
    }
  }
}

TEST_CASE("extension to a spanning out-branching") {
  WeightedDigraph g = digraph(3, {{0, 1}, {0, 2}});
  OutTree full{0, {{1, 0}, {2, 0}}};
  CHECK(extend_to_outbranching(g, full) == full);
  OutTree part{0, {{1, 0}}};
  OutTree ext = extend_to_outbranching(g, part);
  CHECK(ext.parent.at(2) == 0);
  CHECK(is_subset(VertexSet{0}, ext.internal()));
  CHECK_THROWS_AS(extend_to_outbranching(path(3), OutTree{1, {{2, 1}}}), std::invalid_argument);
  Rng r(72);
  for (int i = 0; i < 60; ++i) {
    WeightedDigraph d = random_digraph(r, r.uniform(2, 8), 0.4, 1, 3);
    auto rep = brute_max_wiob(d, Weight(0), d.num_vertices());
    for (std::size_t s = 1; s < rep.witness_by_size.size(); ++s) {
      if (!rep.witness_by_size[s]) continue;
      const OutTree& b = *rep.witness_by_size[s];
      // Any prefix subtree grows back into a spanning branching keeping its arcs.
      OutTree sub{b.root, {}};
      for (const auto& [c, p] : b.parent)
        if (p == b.root) sub.parent[c] = p;
      OutTree e = extend_to_outbranching(d, sub);
      CHECK(is_out_branching(d, e));
      for (const auto& [c, p] : sub.parent) CHECK(e.parent.at(c) == p);
      CHECK(is_subset(sub.internal(), e.internal()));
    }
  }
}

TEST_CASE("solve_k_wiob and the driver") {
  auto t = solve_k_wiob(path(3), Weight(2), 2);
  REQUIRE(t);
  CHECK(t->internal() == VertexSet{0, 1});
  CHECK(is_out_branching(path(3), *t));
  WeightedDigraph dag = digraph(3, {{0, 2}, {1, 2}});
  CHECK_FALSE(solve_k_wiob(dag, Weight(1), 1));
  CHECK_FALSE(solve_wiob_driver(dag, Weight(1)).outcome);
  auto d = solve_wiob_driver(path(4), Weight(3));
  REQUIRE(d.outcome);
  CHECK(d.outcome->weight == Weight(3));
}

TEST_CASE("maximum internal count") {
  WeightedDigraph p = path(4);
  for (int c = 1; c <= 3; ++c) CHECK(max_internal_at_least(p, c));
  CHECK_FALSE(max_internal_at_least(p, 4));
  WeightedDigraph in_star = digraph(4, {{1, 0}, {2, 0}, {3, 0}});
  CHECK_FALSE(max_internal_at_least(in_star, 1));
  Rng r(73);
  for (int i = 0; i < 60; ++i) {
    WeightedDigraph g = random_digraph(r, r.uniform(2, 7), 0.35, 1, 1);
    auto rep = brute_max_wiob(g, Weight(0), g.num_vertices());
    int best = -1;
    for (const auto& [root, internal] : rep.realised) best = std::max(best, static_cast<int>(internal.size()));
    for (int c = 1; c <= g.num_vertices(); ++c) CHECK(max_internal_at_least(g, c) == (best >= c));
  }
}

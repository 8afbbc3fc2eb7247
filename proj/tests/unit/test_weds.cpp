#include <algorithm>

#include "doctest.h"
#include "support/gen.hpp"
#include "wfpt/oracles.hpp"
#include "wfpt/weds.hpp"

using namespace wfpt;
using namespace wfpt::testing;

namespace {

EdgeWeightedGraph edges(int n, std::initializer_list<std::tuple<int, int, long>> es) {
  EdgeWeightedGraph g(n);
  for (const auto& [a, b, w] : es) g.add_edge(a, b, Weight(w));
  return g;
}

EdgeWeightedGraph path4() { return edges(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}); }

bool has_subset_in(const std::vector<VertexSet>& family, const VertexSet& vc) {
  return std::any_of(family.begin(), family.end(), [&](const VertexSet& f) { return is_subset(f, vc); });
}

}  // namespace

TEST_CASE("edge-weighted graph basics") {
  EdgeWeightedGraph g = edges(3, {{2, 0, 4}});
  CHECK(g.edges() == std::vector<Edge>{{0, 2}});
  CHECK(g.weight(2, 0) == Weight(4));
  CHECK(canonical(3, 1) == Edge{1, 3});
  CHECK_THROWS_AS(g.add_edge(1, 1, Weight(1)), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 2, Weight(1)), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3, Weight(1)), std::invalid_argument);
  CHECK(endpoints({{0, 1}, {1, 3}}) == VertexSet{0, 1, 3});
  EdgeWeightedGraph p = path4();
  CHECK(is_edge_dominating_set(p, {{1, 2}}));
  CHECK_FALSE(is_edge_dominating_set(p, {{0, 1}}));
  CHECK(endpoints_form_vertex_cover(p, {{1, 2}}));
}

TEST_CASE("good representations") {
  auto trivial = enumerate_good_rep(edges(5, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}}), 3);
  CHECK(trivial.family == std::vector<VertexSet>{VertexSet{}});
  CHECK(enumerate_good_rep(path4(), 0).family.empty());
  auto rep = enumerate_good_rep(path4(), 2);
  WeightedGraph sk = path4().skeleton();
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    VertexSet vc = mask_to_set(mask, 4);
    if (vc.size() <= 2 && sk.is_vertex_cover(vc)) CHECK(has_subset_in(rep.family, vc));
  }
  Rng r(61);
  for (int i = 0; i < 80; ++i) {
    EdgeWeightedGraph g = random_edge_graph(r, r.uniform(2, 10), 0.35, 40, 1, 5);
    const int budget = r.uniform(0, 6);
    auto fam = enumerate_good_rep(g, budget).family;
    WeightedGraph s = g.skeleton();
    for (const auto& a : fam) {
      CHECK(static_cast<int>(a.size()) <= budget);
      for (const auto& c : connected_components(s.without(a))) CHECK(c.size() <= 3);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.num_vertices()); ++mask) {
      VertexSet vc = mask_to_set(mask, g.num_vertices());
      if (static_cast<int>(vc.size()) <= budget && s.is_vertex_cover(vc)) CHECK(has_subset_in(fam, vc));
    }
  }
}

TEST_CASE("completion of a vertex set") {
  auto one = complete_eds(edges(2, {{0, 1, 3}}), {0});
  REQUIRE(one);
  CHECK(*one == EdgeSet{{0, 1}});
  auto tri = complete_eds(edges(3, {{0, 1, 5}, {1, 2, 2}, {0, 2, 4}}), {});
  REQUIRE(tri);
  CHECK(*tri == EdgeSet{{1, 2}});
  // Isolated vertex in a cannot enter V(U).
  CHECK_FALSE(complete_eds(edges(3, {{0, 1, 1}}), {2}));
  Rng r(62);
  for (int i = 0; i < 80; ++i) {
    EdgeWeightedGraph g = random_edge_graph(r, r.uniform(2, 9), 0.35, 14, 1, 6);
    for (const auto& a : enumerate_good_rep(g, g.num_vertices()).family) {
      auto got = complete_eds(g, a);
      std::optional<Weight> best;
      const auto es = g.edges();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << es.size()); ++mask) {
        EdgeSet u;
        for (std::size_t j = 0; j < es.size(); ++j)
          if (mask >> j & 1) u.push_back(es[j]);
        if (!is_edge_dominating_set(g, u) || !is_subset(a, endpoints(u))) continue;
        Weight w = g.total_weight(u);
        if (!best || w < *best) best = w;
      }
      CHECK(got.has_value() == best.has_value());
      if (got && best) {
        CHECK(is_edge_dominating_set(g, *got));
        CHECK(is_subset(a, endpoints(*got)));
        CHECK(g.total_weight(*got) == *best);
      }
    }
  }
}

TEST_CASE("solve_k_weds examples and contract") {
  auto s = solve_k_weds(edges(2, {{0, 1, 1}}), Weight(1), 1);
  REQUIRE(s);
  CHECK(*s == EdgeSet{{0, 1}});
  EdgeWeightedGraph k4 = edges(4, {{0, 1, 1}, {0, 2, 5}, {0, 3, 5}, {1, 2, 5}, {1, 3, 5}, {2, 3, 5}});
  CHECK_FALSE(solve_k_weds(k4, Weight(5), 2));
  REQUIRE(solve_k_weds(k4, Weight(6), 2));
  Rng r(63);
  long missed = 0;
  for (int i = 0; i < 200; ++i) {
    EdgeWeightedGraph g = random_edge_graph(r, r.uniform(2, 10), 0.3, 16, 1, 6);
    const int k = r.uniform(1, 5);
    Weight W(r.uniform(1, 20));
    auto rep = brute_min_weds(g, W, k);
    auto got = solve_k_weds(g, W, k);
    if (got) CHECK((is_edge_dominating_set(g, *got) && g.total_weight(*got) <= W));
    if (rep.feasible && !got) ++missed;
  }
  CHECK(missed == 0);
}

TEST_CASE("edge dominating set supersets") {
  EdgeWeightedGraph p3 = edges(3, {{0, 1, 1}, {1, 2, 1}});
  auto fam = weds_star_supersets(p3, {{0, 1}});
  CHECK(fam.size() <= 3);
  CHECK(std::find(fam.begin(), fam.end(), VertexSet{0, 1}) != fam.end());
  EdgeWeightedGraph star = edges(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  auto sfam = weds_star_supersets(star, {{0, 1}});
  CHECK(std::find(sfam.begin(), sfam.end(), VertexSet{0}) != sfam.end());
  CHECK_THROWS_AS(weds_star_supersets(path4(), {{0, 1}}), std::invalid_argument);
}

TEST_CASE("minimum cardinality edge dominating set") {
  CHECK(min_unweighted_eds(edges(2, {{0, 1, 1}})) == EdgeSet{{0, 1}});
  CHECK(min_unweighted_eds(path4()) == EdgeSet{{1, 2}});
  CHECK(min_unweighted_eds(EdgeWeightedGraph(3)).empty());
  Rng r(64);
  for (int i = 0; i < 80; ++i) {
    EdgeWeightedGraph g = random_edge_graph(r, r.uniform(2, 9), 0.35, 14, 1, 1);
    EdgeSet s = min_unweighted_eds(g);
    CHECK(is_edge_dominating_set(g, s));
    auto rep = brute_min_weds(g, Weight(1000), g.num_edges());
    std::size_t smallest = g.num_edges();
    for (std::size_t sz = 0; sz < rep.best_by_size.size(); ++sz)
      if (rep.best_by_size[sz]) {
        smallest = sz;
        break;
      }
    CHECK(s.size() == smallest);
  }
}

TEST_CASE("solve_weds_by_t is exact in W") {
  auto s = solve_weds_by_t(edges(2, {{0, 1, 1}}), Weight(1));
  REQUIRE(s);
  CHECK(*s == EdgeSet{{0, 1}});
  CHECK_FALSE(solve_weds_by_t(edges(2, {{0, 1, 1}}), Weight(1, 2)));
  Rng r(65);
  for (int i = 0; i < 100; ++i) {
    EdgeWeightedGraph g = random_edge_graph(r, r.uniform(2, 9), 0.35, 14, 1, 6);
    Weight W(r.uniform(1, 20));
    auto rep = brute_min_weds(g, W, g.num_edges());
    auto got = solve_weds_by_t(g, W);
    const bool exists = rep.best_weight && *rep.best_weight <= W;
    CHECK(got.has_value() == exists);
    if (got) CHECK((is_edge_dominating_set(g, *got) && g.total_weight(*got) <= W));
  }
}

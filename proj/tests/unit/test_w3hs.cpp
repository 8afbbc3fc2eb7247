#include "doctest.h"
#include "support/adapters.hpp"
#include "support/gen.hpp"
#include "wfpt/edge_cover.hpp"
#include "wfpt/oracles.hpp"
#include "wfpt/w3hs.hpp"

using namespace wfpt;
using namespace wfpt::testing;

namespace {

WeightedHypergraph hyper(std::initializer_list<long> ws, std::initializer_list<std::vector<VertexId>> es) {
  WeightedHypergraph h(static_cast<int>(ws.size()));
  int v = 0;
  for (long w : ws) h.add_vertex(v++, Weight(w));
  for (const auto& e : es) h.add_edge(e);
  return h;
}

}  // namespace

TEST_CASE("solve_k_w3hs examples") {
  auto s = solve_k_w3hs(hyper({3, 2, 1}, {{0, 1, 2}}), Weight(1), 1);
  REQUIRE(s);
  CHECK(*s == VertexSet{2});
  CHECK_FALSE(solve_k_w3hs(hyper({2, 2}, {{0, 1}}), Weight(1), 1));
  CHECK_FALSE(solve_k_w3hs(hyper({1, 1}, {{0, 1}}), Weight(-1), 1));
  CHECK_FALSE(solve_k_w3hs(hyper({1, 1}, {{0, 1}}), Weight(1), -1));
  CHECK(solve_k_w3hs(hyper({1, 1}, {}), Weight(0), 0) == VertexSet{});
}

TEST_CASE("solve_k_w3hs contract on random hypergraphs") {
  Rng r(51);
  SolveStats st;
  long missed = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = r.uniform(3, 12);
    WeightedHypergraph h = random_hypergraph(r, n, r.uniform(1, 14), 0.8, 1, r.coin(0.5) ? 1 : 6);
    const int k = r.uniform(1, n);
    Weight W(r.uniform(1, 30));
    auto rep = brute_min_w3hs(h, W, k);
    auto s = solve_k_w3hs(h, W, k, &st);
    if (s) CHECK((h.is_hitting_set(*s) && h.total_weight(*s) <= W));
    if (rep.feasible && !s) ++missed;
  }
  CHECK(missed == 0);
  CHECK(st.nodes > 0);
}

TEST_CASE("solve_w3hs_star contract") {
  Rng r(52);
  for (int i = 0; i < 120; ++i) {
    const int n = r.uniform(3, 11);
    WeightedHypergraph h = random_hypergraph(r, n, r.uniform(1, 12), 0.7, 1, 6);
    const int k = r.uniform(1, n);
    Weight W(r.uniform(1, 25));
    auto rep = brute_min_w3hs(h, W, k);
    auto s = w3hs_star(0)(h, W, k);
    if (s) CHECK((h.is_hitting_set(*s) && h.total_weight(*s) <= W));
    if (rep.feasible) CHECK(s.has_value());
  }
}

TEST_CASE("degree-two base case") {
  auto two = deg2_hypergraph_min_whs(hyper({1, 2, 3, 1}, {{0, 1}, {2, 3}}));
  CHECK(two == VertexSet{0, 3});
  auto shared = deg2_hypergraph_min_whs(hyper({5, 5, 1, 5, 5}, {{0, 1, 2}, {2, 3, 4}}));
  CHECK(shared == VertexSet{2});
  CHECK_THROWS_AS(deg2_hypergraph_min_whs(hyper({1, 1, 1}, {{0, 1}, {0, 2}, {0, 1, 2}})), std::invalid_argument);
  CHECK(deg2_hypergraph_min_whs(hyper({1}, {})).empty());
  Rng r(53);
  for (int i = 0; i < 150; ++i) {
    WeightedHypergraph h = random_deg2_hypergraph(r, r.uniform(2, 14), r.uniform(1, 9), 1, 9);
    VertexSet s = deg2_hypergraph_min_whs(h);
    CHECK(h.is_hitting_set(s));
    auto rep = brute_min_w3hs(h, Weight(1), h.num_vertices());
    CHECK(h.total_weight(s) == *rep.best_weight);
  }
}

TEST_CASE("minimum cardinality hitting set") {
  CHECK(min_unweighted_3hs(hyper({1, 1, 1}, {{0, 1, 2}})) == VertexSet{0});
  CHECK(min_unweighted_3hs(hyper({1, 1}, {})).empty());
  Rng r(54);
  for (int i = 0; i < 100; ++i) {
    WeightedHypergraph h = random_hypergraph(r, r.uniform(2, 12), r.uniform(1, 14), 0.6, 1, 1);
    VertexSet s = min_unweighted_3hs(h);
    CHECK(h.is_hitting_set(s));
    auto rep = brute_min_w3hs(h, Weight(1000), h.num_vertices());
    std::size_t smallest = h.num_vertices();
    for (std::size_t sz = 0; sz < rep.best_by_size.size(); ++sz)
      if (rep.best_by_size[sz]) {
        smallest = sz;
        break;
      }
    CHECK(s.size() == smallest);
  }
}

TEST_CASE("minimum weight edge cover") {
  CHECK(min_weight_edge_cover(2, {{0, 1, Weight(4)}}, {0, 1}) == std::vector<int>{0});
  std::vector<Link> tri{{0, 1, Weight(1)}, {1, 2, Weight(2)}, {0, 2, Weight(3)}};
  CHECK(min_weight_edge_cover(3, tri, {0, 1, 2}) == std::vector<int>{0, 1});
  CHECK(min_weight_edge_cover(3, tri, {}).empty());
  CHECK_THROWS_AS(min_weight_edge_cover(3, {{0, 1, Weight(1)}}, {2}), InfeasibleError);
  // Parallel links and loops are allowed in the dual multigraph.
  std::vector<Link> multi{{0, 1, Weight(5)}, {0, 1, Weight(2)}, {1, 1, Weight(1)}};
  CHECK(min_weight_edge_cover(2, multi, {0, 1}) == std::vector<int>{1});
  Rng r(55);
  for (int i = 0; i < 150; ++i) {
    const int n = r.uniform(1, 7);
    std::vector<Link> links;
    const int m = r.uniform(0, 9);
    for (int j = 0; j < m; ++j) links.push_back({r.uniform(0, n - 1), r.uniform(0, n - 1), r.weight(1, 9)});
    std::vector<int> req;
    for (int v = 0; v < n; ++v)
      if (r.coin(0.6)) req.push_back(v);
    std::optional<Weight> best;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<char> hit(n, 0);
      Weight w(0);
      for (int j = 0; j < m; ++j)
        if (mask >> j & 1) {
          hit[links[j].a] = hit[links[j].b] = 1;
          w = w + links[j].w;
        }
      bool ok = true;
      for (int v : req) ok = ok && hit[v];
      if (ok && (!best || w < *best)) best = w;
    }
    if (!best) {
      CHECK_THROWS_AS(min_weight_edge_cover(n, links, req), InfeasibleError);
      continue;
    }
    auto got = min_weight_edge_cover(n, links, req);
    Weight w(0);
    std::vector<char> hit(n, 0);
    for (int j : got) {
      w = w + links[j].w;
      hit[links[j].a] = hit[links[j].b] = 1;
    }
    for (int v : req) CHECK(hit[v]);
    CHECK(w == *best);
  }
}

#include "doctest.h"
#include "support/adapters.hpp"
#include "support/gen.hpp"
#include "wfpt/oracles.hpp"
#include "wfpt/wiob.hpp"

using namespace wfpt;
using namespace wfpt::testing;

namespace {

WeightedGraph edge(long a, long b) {
  WeightedGraph g(2);
  g.add_vertex(0, Weight(a));
  g.add_vertex(1, Weight(b));
  g.add_edge(0, 1);
  return g;
}

}  // namespace

TEST_CASE("driver on a single edge") {
  WeightedGraph g = edge(1, 2);
  auto d = solve_weighted(g, Weight(5), wvc_kvariant(wvc_search()), g.num_vertices());
  REQUIRE(d.outcome);
  CHECK(d.achieved_k == 1);
  CHECK(d.outcome->payload == VertexSet{0});
  CHECK(d.outcome->weight == Weight(1));

  WeightedGraph h = edge(2, 2);
  auto n = solve_weighted(h, Weight(1), wvc_kvariant(wvc_search()), h.num_vertices());
  CHECK_FALSE(n.outcome);
  CHECK(n.achieved_k == 1);
}

TEST_CASE("driver rejects a solver that breaks its contract") {
  WeightedGraph g = edge(1, 2);
  auto liar = wvc_kvariant([](const WeightedGraph&, const Weight&, int) { return std::optional<VertexSet>{VertexSet{}}; });
  CHECK_THROWS_AS(solve_weighted(g, Weight(5), liar, 2), ContractViolation);
  auto heavy = wvc_kvariant([](const WeightedGraph&, const Weight&, int) { return std::optional<VertexSet>{VertexSet{1}}; });
  CHECK_THROWS_AS(solve_weighted(g, Weight(1), heavy, 2), ContractViolation);
}

TEST_CASE("driver is complete and sound against the oracle") {
  Rng r(31);
  for (int i = 0; i < 150; ++i) {
    const int n = r.uniform(2, 12);
    WeightedGraph g = random_graph(r, n, 0.35, 1, 6);
    Weight W(r.uniform(1, 25));
    auto rep = brute_min_wvc(g, W, n);
    auto d = solve_weighted(g, W, wvc_kvariant(wvc_search(0)), g.num_vertices());
    CHECK(d.outcome.has_value() == rep.min_size_meeting_W.has_value());
    CHECK(d.achieved_k <= std::max(1L, std::min(W.floor(), static_cast<long>(n))));
    if (d.outcome) {
      CHECK(g.is_vertex_cover(d.outcome->payload));
      CHECK(d.outcome->weight <= W);
      // Flexible k: the first success never comes later than the oracle's s.
      CHECK(d.achieved_k <= std::max(1, *rep.min_size_meeting_W));
    }
  }
}

TEST_CASE("out-branching driver") {
  WeightedDigraph path(3);
  for (int v = 0; v < 3; ++v) path.add_vertex(v, Weight(1));
  path.add_arc(0, 1);
  path.add_arc(1, 2);
  auto d = solve_wiob_driver(path, Weight(2));
  REQUIRE(d.outcome);
  CHECK(d.outcome->payload.root == 0);
  CHECK(d.outcome->payload.internal() == VertexSet{0, 1});
  CHECK(d.outcome->weight == Weight(2));

  WeightedDigraph one(1);
  one.add_vertex(0, Weight(1));
  CHECK_FALSE(solve_wiob_driver(one, Weight(1)).outcome);
}

TEST_CASE("out-branching driver matches the brute-force maximum") {
  Rng r(32);
  for (int i = 0; i < 60; ++i) {
    WeightedDigraph g = random_digraph(r, 8, 0.3, 1, 4);
    auto rep = brute_max_wiob(g, Weight(1), 8);
    if (!rep.best_weight || *rep.best_weight < Weight(1)) continue;
    const Weight best = *rep.best_weight;
    auto hit = solve_wiob_driver(g, best);
    REQUIRE(hit.outcome);
    CHECK(hit.outcome->weight >= best);
    CHECK_FALSE(solve_wiob_driver(g, best + Weight(1)).outcome);
  }
}

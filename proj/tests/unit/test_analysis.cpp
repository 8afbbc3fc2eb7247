#include <cmath>

#include "doctest.h"
#include "wfpt/analysis.hpp"

using namespace wfpt;

namespace {

WeightedHypergraph hyper(int n, std::initializer_list<std::vector<VertexId>> edges) {
  WeightedHypergraph h(n);
  for (int v = 0; v < n; ++v) h.add_vertex(v, Weight(1));
  for (const auto& e : edges) h.add_edge(e);
  return h;
}

}  // namespace

TEST_CASE("branching roots of known vectors") {
  CHECK(branching_root({1, 4}) == doctest::Approx(1.380278).epsilon(1e-6));
  CHECK(branching_root({1, 4}) < 1.381);
  CHECK(branching_root({1, 1}) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(branching_root({2, 3}) == doctest::Approx(1.324718).epsilon(1e-6));
  CHECK(branching_root({2, 2}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(branching_root({7}) == 1.0);
  CHECK_THROWS_AS(branching_root({}), std::invalid_argument);
  CHECK_THROWS_AS(branching_root({1, 0}), std::invalid_argument);
}

TEST_CASE("branching root is permutation invariant and monotone") {
  CHECK(std::fabs(branching_root({3, 4, 5, 6}) - branching_root({6, 4, 3, 5})) < 1e-9);
  CHECK(branching_root({3, 4, 3}) > branching_root({3, 4, 4}));
  CHECK(branching_root({0.45, 2.45}) > branching_root({0.5, 2.45}));
  // Fractional decreases bracket the claimed constant.
  CHECK(branching_root({0.13, 3.13}) < 2.168);
}

TEST_CASE("alpha measure cases") {
  CHECK(alpha_value(hyper(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}})) == doctest::Approx(0.87));
  CHECK(alpha_value(hyper(4, {{0, 1}, {1, 2, 3}})) == doctest::Approx(0.35));
  CHECK(alpha_value(hyper(4, {{0, 1, 2}, {1, 2, 3}})) == 0.0);
  CHECK(alpha_value(hyper(4, {{0, 1}, {0, 2}, {0, 3}})) == doctest::Approx(0.55));
  CHECK(alpha_value(hyper(4, {{0, 1}, {1, 2}, {2, 3}})) == doctest::Approx(0.8));
  CHECK(alpha_value(hyper(3, {{0, 1}, {1, 2}})) == doctest::Approx(0.55));
  CHECK(alpha_measure(hyper(3, {{0, 1}}), 4) == doctest::Approx(4 - 0.35 + 1));
}

TEST_CASE("measure over a vertex cover") {
  WeightedGraph g = WeightedGraph::complete_id_space(3);
  g.add_edge(0, 1);
  CHECK(mc_measure(g, {}) == 0);
  CHECK(mc_measure(g, {0, 2}) == 0);
  CHECK(mc_measure(g, {0, 1}) == 2);
}

#include <random>

#include "wfpt/io.hpp"

namespace wfpt::io {

namespace {

// Fixed mappings from raw 64-bit draws so output does not depend on the
// standard library's distribution implementations.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  long between(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin(double p) { return unit() < p; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

Instance gen_random(const RandomSpec& spec) {
  if (spec.n < 0) throw std::invalid_argument("n must be non-negative");
  if (spec.weight_min < 1 || spec.weight_max < spec.weight_min)
    throw std::invalid_argument("weights need 1 <= min <= max");
  Draw d(spec.seed);
  Instance inst;
  inst.problem = spec.problem;
  inst.n = spec.n;
  const int n = spec.n;
  std::vector<Weight> w;
  if (spec.problem != Problem::Weds)
    for (int v = 0; v < n; ++v) w.emplace_back(d.between(spec.weight_min, spec.weight_max));
  switch (spec.problem) {
    case Problem::Wvc:
      inst.graph = WeightedGraph(n);
      for (int v = 0; v < n; ++v) inst.graph.add_vertex(v, w[v]);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (d.coin(spec.density)) inst.graph.add_edge(u, v);
      break;
    case Problem::W3hs:
      inst.hypergraph = WeightedHypergraph(n);
      for (int v = 0; v < n; ++v) inst.hypergraph.add_vertex(v, w[v]);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int c = b + 1; c < n; ++c)
            if (d.coin(spec.density)) inst.hypergraph.add_edge(HyperEdge{a, b, c});
      break;
    case Problem::Weds:
      inst.edge_graph = EdgeWeightedGraph(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (d.coin(spec.density)) inst.edge_graph.add_edge(u, v, Weight(d.between(spec.weight_min, spec.weight_max)));
      break;
    case Problem::Wiob:
      inst.digraph = WeightedDigraph(n);
      for (int v = 0; v < n; ++v) inst.digraph.add_vertex(v, w[v]);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (u != v && d.coin(spec.density)) inst.digraph.add_arc(u, v);
      break;
  }
  return inst;
}

CvcbReduction gen_cvcb_reduction(int num_left, int num_right, const std::vector<std::pair<int, int>>& edges,
                                 int kL, int kR) {
  if (num_left < 0 || num_right < 0) throw std::invalid_argument("side sizes must be non-negative");
  if (kL < 0 || kL > num_left || kR < 0 || kR > num_right)
    throw std::invalid_argument("need 0 <= kL <= |L| and 0 <= kR <= |R|");
  const int n = num_left + num_right;
  const int pend = n * n;
  CvcbReduction out;
  out.n = n;
  Weight heavy(1);
  for (int i = 0; i < 10; ++i) heavy = heavy * Weight(n);
  const int total = n + num_left * pend;
  out.graph = WeightedGraph(total);
  for (int v = 0; v < num_left; ++v) {
    out.graph.add_vertex(v, heavy);
    out.left.push_back(v);
  }
  for (int v = num_left; v < total; ++v) {
    out.graph.add_vertex(v, Weight(1));
    out.right.push_back(v);
  }
  for (const auto& [l, r] : edges) {
    // Indices outside their side would join two vertices of the same side.
    if (l < 0 || l >= num_left || r < 0 || r >= num_right)
      throw std::invalid_argument("edge does not join L to R");
    out.graph.add_edge(l, num_left + r);
  }
  for (int v = 0; v < num_left; ++v)
    for (int j = 0; j < pend; ++j) out.graph.add_edge(v, n + v * pend + j);
  out.W = heavy * Weight(kL) + Weight(kR) + Weight(static_cast<long>(pend) * (num_left - kL));
  out.k = kL + kR + static_cast<long>(pend) * (num_left - kL);
  return out;
}

}  // namespace wfpt::io

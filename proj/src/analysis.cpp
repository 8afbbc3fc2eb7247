#include "wfpt/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wfpt {

double branching_root(const BranchingVector& b, double tol) {
  if (b.empty()) throw std::invalid_argument("empty branching vector");
  for (double x : b)
    if (!(x > 0) || !std::isfinite(x)) throw std::invalid_argument("branching entries must be positive");
  if (b.size() == 1) return 1.0;
  // Equivalent form: sum_i x^{-b_i} = 1, strictly decreasing for x > 1.
  auto f = [&](long double x) {
    long double s = 0;
    for (double bi : b) s += std::pow(x, -static_cast<long double>(bi));
    return s - 1;
  };
  double bmin = *std::min_element(b.begin(), b.end());
  long double lo = 1;
  long double hi = std::pow(static_cast<long double>(b.size()), 1.0L / bmin);
  while (hi - lo > tol / 4) {
    long double mid = (lo + hi) / 2;
    if (f(mid) > 0)
      lo = mid;
    else
      hi = mid;
  }
  return static_cast<double>((lo + hi) / 2);
}

double alpha_value(const WeightedHypergraph& h, const MeasureParams& p) {
  std::vector<HyperEdge> twos;
  for (const auto& e : h.edges())
    if (e.size == 2) twos.push_back(e);
  if (twos.size() >= 4) return p.alpha4;
  if (twos.size() == 3) {
    bool common = false;
    for (VertexId x : twos[0])
      if (twos[1].contains(x) && twos[2].contains(x)) common = true;
    if (!common) return p.alpha3;
  }
  if (twos.size() >= 2) return p.alpha2;
  if (twos.size() == 1) return p.alpha1;
  return 0.0;
}

double alpha_measure(const WeightedHypergraph& h, int k, const MeasureParams& p) {
  return k - alpha_value(h, p) + 1;
}

int mc_measure(const WeightedGraph& g, const VertexSet& u) {
  VertexSet us = make_set(u);
  for (VertexId v : us)
    if (!g.contains(v)) throw std::invalid_argument("measure set has a vertex outside the graph");
  int singletons = 0;
  for (VertexId v : us) {
    bool lonely = true;
    for (VertexId x : g.neighbors(v))
      if (set_contains(us, x)) {
        lonely = false;
        break;
      }
    if (lonely) ++singletons;
  }
  return static_cast<int>(us.size()) - singletons;
}

}  // namespace wfpt

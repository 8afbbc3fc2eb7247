#include "wfpt/framework.hpp"
#include "wfpt/io.hpp"
#include "wfpt/oracles.hpp"
#include "wfpt/w3hs.hpp"
#include "wfpt/wvc.hpp"

namespace wfpt::io {

namespace {

using VertexSolve = std::function<std::optional<VertexSet>(const WeightedGraph&, const Weight&, int)>;

KVariantSolver<WeightedGraph, VertexSet> wvc_solver(VertexSolve f) {
  return {"wvc", WeightSense::AtMost, std::move(f),
          [](const WeightedGraph& g, const VertexSet& s) { return g.is_vertex_cover(s); },
          [](const WeightedGraph& g, const VertexSet& s) { return g.total_weight(s); }};
}

template <typename P>
void fill(SolveReport& r, const DriverResult<P>& d, nlohmann::json (*to_json)(const P&)) {
  r.achieved_k = d.achieved_k;
  r.solved = d.outcome.has_value();
  if (d.outcome) {
    r.solution = to_json(d.outcome->payload);
    r.weight = d.outcome->weight;
  }
}

nlohmann::json vs_json(const VertexSet& s) { return vertex_list(s); }
nlohmann::json es_json(const EdgeSet& s) { return edge_list(s); }
nlohmann::json ot_json(const OutTree& t) { return out_tree_json(t); }

}  // namespace

SolveReport solve_instance(const Instance& inst, const Weight& W, const std::string& solver, bool with_stats) {
  SolveReport r;
  r.problem = inst.problem;
  r.solver = solver;
  SolveStats stats;
  SolveStats* sp = with_stats ? &stats : nullptr;
  auto unsupported = [&]() {
    return std::invalid_argument("solver '" + solver + "' is not available for " + to_string(inst.problem));
  };
  switch (inst.problem) {
    case Problem::Wvc: {
      const WeightedGraph& g = inst.graph;
      VertexSolve f;
      if (solver == "search") {
        f = [sp](const WeightedGraph& h, const Weight& w, int k) {
          WvcOptions o;
          o.stats = sp;
          return solve_k_wvc(h, w, k, o);
        };
      } else if (solver == "memo") {
        f = [sp](const WeightedGraph& h, const Weight& w, int k) -> std::optional<VertexSet> {
          MemoOptions o;
          o.stats = sp;
          auto s = solve_k_wvcnow_memo(h, k, o);
          if (s && h.total_weight(*s) <= w) return s;
          return std::nullopt;
        };
      } else if (solver == "baseline") {
        f = [](const WeightedGraph& h, const Weight& w, int k) { return baseline_alg3(h, w, k); };
      } else if (solver == "star") {
        // Exact in W, so a single call settles the instance.
        const VertexSet mvc = min_unweighted_vc(g);
        auto s = solve_wvc_star(g, W, mvc, sp);
        r.achieved_k = static_cast<int>(mvc.size());
        r.solved = s.has_value();
        if (s) {
          r.solution = vertex_list(*s);
          r.weight = g.total_weight(*s);
        }
        break;
      } else {
        throw unsupported();
      }
      fill(r, solve_weighted(g, W, wvc_solver(f), g.num_vertices()), vs_json);
      break;
    }
    case Problem::W3hs: {
      const WeightedHypergraph& h = inst.hypergraph;
      std::function<std::optional<VertexSet>(const WeightedHypergraph&, const Weight&, int)> f;
      if (solver == "search") {
        f = [sp](const WeightedHypergraph& x, const Weight& w, int k) { return solve_k_w3hs(x, w, k, sp); };
      } else if (solver == "star") {
        f = [sp](const WeightedHypergraph& x, const Weight& w, int k) {
          WvcKSolver inner = [sp](const WeightedGraph& g, const Weight& ww, int kk) {
            WvcOptions o;
            o.stats = sp;
            return solve_k_wvc(g, ww, kk, o);
          };
          return solve_w3hs_star(x, w, k, inner);
        };
      } else {
        throw unsupported();
      }
      KVariantSolver<WeightedHypergraph, VertexSet> ks{
          "w3hs", WeightSense::AtMost, f,
          [](const WeightedHypergraph& x, const VertexSet& s) { return x.is_hitting_set(s); },
          [](const WeightedHypergraph& x, const VertexSet& s) { return x.total_weight(s); }};
      fill(r, solve_weighted(h, W, ks, h.num_vertices()), vs_json);
      break;
    }
    case Problem::Weds: {
      const EdgeWeightedGraph& g = inst.edge_graph;
      if (solver == "search") {
        KVariantSolver<EdgeWeightedGraph, EdgeSet> ks{
            "weds", WeightSense::AtMost,
            [sp](const EdgeWeightedGraph& x, const Weight& w, int k) { return solve_k_weds(x, w, k, sp); },
            [](const EdgeWeightedGraph& x, const EdgeSet& s) { return is_edge_dominating_set(x, s); },
            [](const EdgeWeightedGraph& x, const EdgeSet& s) { return x.total_weight(s); }};
        fill(r, solve_weighted(g, W, ks, g.num_edges()), es_json);
      } else if (solver == "star") {
        auto s = solve_weds_by_t(g, W);
        r.solved = s.has_value();
        if (s) {
          r.solution = edge_list(*s);
          r.weight = g.total_weight(*s);
          r.achieved_k = static_cast<int>(s->size());
        }
      } else {
        throw unsupported();
      }
      break;
    }
    case Problem::Wiob: {
      if (solver != "search") throw unsupported();
      ITreeEngine engine = [sp](const WeightedDigraph& g, VertexId root, const Weight& w, int k) {
        return weighted_k_itree(g, root, w, k, sp);
      };
      fill(r, solve_wiob_driver(inst.digraph, W, engine), ot_json);
      break;
    }
  }
  if (with_stats) r.stats = stats;
  return r;
}

}  // namespace wfpt::io

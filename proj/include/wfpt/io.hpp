#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wfpt/graph.hpp"
#include "wfpt/stats.hpp"
#include "wfpt/weds.hpp"
#include "wfpt/wiob.hpp"

namespace wfpt::io {

enum class Problem { Wvc, W3hs, Weds, Wiob };

std::string to_string(Problem p);
// Throws std::invalid_argument on an unknown tag.
Problem parse_problem(const std::string& tag);

// One instance of any of the four problems; only the member matching
// `problem` is populated. File ids are 1-based, internal ids 0-based.
struct Instance {
  Problem problem = Problem::Wvc;
  int n = 0;
  WeightedGraph graph;
  WeightedHypergraph hypergraph;
  EdgeWeightedGraph edge_graph;
  WeightedDigraph digraph;
  std::vector<std::string> comments;

  int num_records() const;
  friend bool operator==(const Instance& a, const Instance& b) {
    return a.problem == b.problem && a.n == b.n && a.graph == b.graph && a.hypergraph == b.hypergraph &&
           a.edge_graph == b.edge_graph && a.digraph == b.digraph;
  }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

Instance parse_instance(const std::string& text);
Instance read_instance_file(const std::string& path);
std::string serialize_instance(const Instance& inst);

// Result record, JSON with "schema": 1.
struct SolveReport {
  Problem problem = Problem::Wvc;
  std::string solver;
  bool solved = false;
  nlohmann::json solution;
  std::optional<Weight> weight;
  int achieved_k = 0;
  std::optional<SolveStats> stats;
};

nlohmann::json vertex_list(const VertexSet& vs);
nlohmann::json edge_list(const EdgeSet& es);
nlohmann::json out_tree_json(const OutTree& t);
std::string serialize_result(const SolveReport& r);

// Runs the named solver ("search", "star", "memo", "baseline") through the
// k-iterating driver. Throws std::invalid_argument for unsupported pairs.
SolveReport solve_instance(const Instance& inst, const Weight& W, const std::string& solver,
                           bool with_stats);

struct RandomSpec {
  Problem problem = Problem::Wvc;
  int n = 0;
  // Probability of each pair (triple for w3hs, ordered pair for wiob).
  double density = 0;
  long weight_min = 1;
  long weight_max = 1;
  std::uint64_t seed = 0;
};

// Deterministic for a given RandomSpec on every platform.
Instance gen_random(const RandomSpec& spec);

struct CvcbReduction {
  WeightedGraph graph;
  int n = 0;  // |L| + |R| of the source instance
  VertexSet left;
  VertexSet right;
  Weight W;
  long k = 0;
};

// Builds the restricted weighted vertex cover instance for a constrained
// bipartite cover question. Edges are (left index, right index) pairs.
CvcbReduction gen_cvcb_reduction(int num_left, int num_right, const std::vector<std::pair<int, int>>& edges,
                                 int kL, int kR);

}  // namespace wfpt::io

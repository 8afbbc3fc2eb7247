#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wfpt/analysis.hpp"
#include "wfpt/io.hpp"

using namespace wfpt;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted parameterized solvers for vertex cover, 3-hitting set, edge domination and internal out-branching"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  std::string problem, input, wbound, solver = "search";
  bool stats = false;
  solve->add_option("problem", problem, "wvc | w3hs | weds | wiob")->required();
  solve->add_option("--input", input, "Instance file")->required();
  solve->add_option("--wbound", wbound, "Weight bound W as p/q or integer")->required();
  solve->add_option("--solver", solver, "search | star | memo | baseline");
  solve->add_flag("--stats", stats, "Report search-tree statistics");

  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  auto* gen_random = gen->add_subcommand("random", "Seeded random instance");
  io::RandomSpec spec;
  std::string gen_problem = "wvc", output;
  gen_random->add_option("--problem", gen_problem, "wvc | w3hs | weds | wiob");
  gen_random->add_option("--n", spec.n, "Number of vertices")->required();
  gen_random->add_option("--density", spec.density, "Inclusion probability");
  gen_random->add_option("--wmin", spec.weight_min, "Smallest weight");
  gen_random->add_option("--wmax", spec.weight_max, "Largest weight");
  gen_random->add_option("--seed", spec.seed, "Seed");
  gen_random->add_option("--output", output, "Output file (default stdout)");

  auto* gen_cvcb = gen->add_subcommand("cvcb", "Restricted vertex cover instance from a constrained bipartite cover question");
  int left = 0, right = 0, kl = 0, kr = 0;
  std::string edges;
  gen_cvcb->add_option("--left", left, "|L|")->required();
  gen_cvcb->add_option("--right", right, "|R|")->required();
  gen_cvcb->add_option("--edges", edges, "Comma-separated l-r pairs, 1-based");
  gen_cvcb->add_option("--kl", kl, "Exact number of L vertices")->required();
  gen_cvcb->add_option("--kr", kr, "Maximum number of R vertices")->required();
  gen_cvcb->add_option("--output", output, "Output file (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "Branching analysis");
  analyze->require_subcommand(1);
  auto* root = analyze->add_subcommand("root", "Root of a branching vector");
  std::string vec;
  root->add_option("vector", vec, "Comma-separated decreases, e.g. 1,4")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve) {
      io::Instance inst = io::read_instance_file(input);
      if (io::to_string(inst.problem) != problem)
        throw std::invalid_argument("file holds a " + io::to_string(inst.problem) + " instance");
      io::SolveReport r = io::solve_instance(inst, Weight::parse(wbound), solver, stats);
      std::cout << io::serialize_result(r) << "\n";
      return r.solved ? 0 : 1;
    }
    if (*gen_random) {
      spec.problem = io::parse_problem(gen_problem);
      io::Instance inst = io::gen_random(spec);
      std::ostringstream c;
      c << "random " << gen_problem << " n=" << spec.n << " density=" << spec.density << " weights="
        << spec.weight_min << ".." << spec.weight_max << " seed=" << spec.seed;
      inst.comments.push_back(c.str());
      emit(io::serialize_instance(inst), output);
      return 0;
    }
    if (*gen_cvcb) {
      std::vector<std::pair<int, int>> es;
      for (const auto& pair : split(edges, ',')) {
        auto parts = split(pair, '-');
        if (parts.size() != 2) throw std::invalid_argument("edge '" + pair + "' must be l-r");
        es.emplace_back(std::stoi(parts[0]) - 1, std::stoi(parts[1]) - 1);
      }
      io::CvcbReduction red = io::gen_cvcb_reduction(left, right, es, kl, kr);
      io::Instance inst;
      inst.problem = io::Problem::Wvc;
      inst.n = red.graph.num_vertices();
      inst.graph = red.graph;
      inst.comments.push_back("W' " + red.W.str());
      inst.comments.push_back("k' " + std::to_string(red.k));
      emit(io::serialize_instance(inst), output);
      return 0;
    }
    if (*root) {
      BranchingVector b;
      for (const auto& t : split(vec, ',')) b.push_back(std::stod(t));
      std::printf("%.6f\n", branching_root(b));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

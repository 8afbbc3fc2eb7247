#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "wfpt/analysis.hpp"
#include "wfpt/io.hpp"

using namespace wfpt;
using namespace wfpt::io;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int parse_error_line(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string out = std::string(WFPT_TEST_TMP) + "/cli_out.txt";
  const std::string cmd = std::string(WFPT_CLI) + " " + args + " > " + out + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, read_file(out)};
}

const std::string golden = std::string(WFPT_GOLDEN_DIR) + "/wvc_n12_d03_s7.txt";

}  // namespace

TEST_CASE("parse a single-edge instance") {
  Instance inst = parse_instance("p wvc 2 1\nv 1 1/1\nv 2 2/1\ne 1 2\n");
  CHECK(inst.problem == Problem::Wvc);
  CHECK(inst.graph.num_vertices() == 2);
  CHECK(inst.graph.adjacent(0, 1));
  CHECK(inst.graph.weight(1) == Weight(2));
  Instance c = parse_instance("c comment\n\np wvc 1 0\n");
  CHECK(c.graph.weight(0) == Weight(1));
  CHECK(c.comments == std::vector<std::string>{"comment"});
}

TEST_CASE("parse errors carry the line number") {
  CHECK(parse_error_line("e 1 2\n") == 1);
  CHECK(parse_error_line("p wvc 2 1\nv 3 1\ne 1 2\n") == 2);
  CHECK(parse_error_line("p wvc 2 1\ne 1 2\ne 1 2\n") == 3);
  CHECK(parse_error_line("p wvc 2 1\nv 1 x\ne 1 2\n") == 2);
  CHECK(parse_error_line("p foo 2 1\n") == 1);
  CHECK(parse_error_line("p w3hs 4 1\ne 1 2 3 4\n") == 2);
  CHECK(parse_error_line("p weds 2 1\nv 1 1\ne 1 2 1\n") == 2);
  CHECK(parse_error_line("p wiob 2 1\na 1 1\n") == 2);
  CHECK(parse_error_line("p wvc 2 2\ne 1 2\n") > 0);
  CHECK(parse_error_line("") > 0);
  CHECK_THROWS_AS(read_instance_file("/nonexistent/instance.txt"), std::runtime_error);
}

TEST_CASE("round-trip on random instances") {
  const Problem all[] = {Problem::Wvc, Problem::W3hs, Problem::Weds, Problem::Wiob};
  for (int i = 0; i < 100; ++i) {
    RandomSpec spec;
    spec.problem = all[i % 4];
    spec.n = 1 + i % 11;
    spec.density = 0.1 * (i % 7);
    spec.weight_min = 1;
    spec.weight_max = 1 + i % 6;
    spec.seed = 1000 + i;
    Instance inst = gen_random(spec);
    Instance back = parse_instance(serialize_instance(inst));
    CHECK(back == inst);
    CHECK(serialize_instance(back) == serialize_instance(inst));
  }
}

TEST_CASE("generator determinism") {
  RandomSpec spec;
  spec.n = 12;
  spec.density = 0.3;
  spec.weight_max = 5;
  spec.seed = 7;
  CHECK(gen_random(spec) == gen_random(spec));
  spec.density = 0;
  CHECK(gen_random(spec).graph.num_edges() == 0);
  spec.density = 0.3;
  CHECK(gen_random(spec) == read_instance_file(golden));
}

TEST_CASE("result records") {
  SolveReport nil;
  nil.solver = "search";
  auto j = nlohmann::json::parse(serialize_result(nil));
  CHECK(j["status"] == "nil");
  CHECK(j["schema"] == 1);
  SolveReport r = solve_instance(read_instance_file(golden), Weight(100), "search", true);
  CHECK(r.solved);
  CHECK(*r.weight == Weight(17));
  CHECK(r.stats.has_value());
  CHECK_FALSE(solve_instance(read_instance_file(golden), Weight(16), "memo", false).solved);
  CHECK_THROWS_AS(solve_instance(read_instance_file(golden), Weight(1), "unknown", false), std::invalid_argument);
}

TEST_CASE("solvers agree on the golden instance") {
  Instance inst = read_instance_file(golden);
  for (const char* s : {"search", "star", "memo", "baseline"})
    for (long w : {16L, 17L, 30L}) {
      CAPTURE(s);
      CAPTURE(w);
      SolveReport r = solve_instance(inst, Weight(w), s, false);
      CHECK(r.solved == (w >= 17));
      if (r.solved) CHECK(*r.weight <= Weight(w));
    }
}

TEST_CASE("constrained bipartite reduction arithmetic") {
  CvcbReduction red = gen_cvcb_reduction(1, 1, {{0, 0}}, 1, 0);
  CHECK(red.n == 2);
  CHECK(red.right.size() == 5);
  CHECK(red.W == Weight(1024));
  CHECK(red.k == 1);
  CvcbReduction full = gen_cvcb_reduction(2, 1, {{0, 0}, {1, 0}}, 2, 1);
  CHECK(full.W == Weight(59049L * 2 + 1));
}

TEST_CASE("command line") {
  CHECK(cli("analyze root 1,4").out == "1.380278\n");
  CliRun solved = cli("solve wvc --input " + golden + " --wbound 17");
  CHECK(solved.code == 0);
  CHECK(nlohmann::json::parse(solved.out)["weight"] == "17/1");
  CHECK(cli("solve wvc --input " + golden + " --wbound 16").code == 1);
  CHECK(cli("solve w3hs --input " + golden + " --wbound 16").code == 2);
  CHECK(cli("solve wvc --input /nonexistent --wbound 1").code == 2);
  CHECK(cli("bogus").code == 2);
  CliRun gen = cli("gen random --problem wvc --n 12 --density 0.3 --wmin 1 --wmax 5 --seed 7");
  CHECK(gen.code == 0);
  CHECK(gen.out == read_file(golden));
  CHECK(cli("gen cvcb --left 1 --right 1 --edges 1-1 --kl 1 --kr 0").code == 0);
}

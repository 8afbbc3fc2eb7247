#include <algorithm>
#include <fstream>
#include <sstream>

#include "wfpt/io.hpp"

namespace wfpt::io {

std::string to_string(Problem p) {
  switch (p) {
    case Problem::Wvc:
      return "wvc";
    case Problem::W3hs:
      return "w3hs";
    case Problem::Weds:
      return "weds";
    case Problem::Wiob:
      return "wiob";
  }
  return "?";
}

Problem parse_problem(const std::string& tag) {
  if (tag == "wvc") return Problem::Wvc;
  if (tag == "w3hs") return Problem::W3hs;
  if (tag == "weds") return Problem::Weds;
  if (tag == "wiob") return Problem::Wiob;
  throw std::invalid_argument("unknown problem '" + tag + "'");
}

int Instance::num_records() const {
  switch (problem) {
    case Problem::Wvc:
      return graph.num_edges();
    case Problem::W3hs:
      return hypergraph.num_edges();
    case Problem::Weds:
      return edge_graph.num_edges();
    case Problem::Wiob:
      return digraph.num_arcs();
  }
  return 0;
}

namespace {

int parse_id(const std::string& tok, int n, int line) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "bad vertex id '" + tok + "'");
  }
  if (used != tok.size() || v < 1 || v > n) throw ParseError(line, "vertex id '" + tok + "' out of range");
  return static_cast<int>(v - 1);
}

Weight parse_weight(const std::string& tok, int line) {
  try {
    return Weight::parse(tok);
  } catch (const std::exception&) {
    throw ParseError(line, "bad weight '" + tok + "'");
  }
}

}  // namespace

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool have_header = false;
  int m = 0;
  Instance inst;
  struct Record {
    char kind;
    std::vector<std::string> toks;
    int line;
  };
  std::vector<Record> records;
  std::vector<std::optional<Weight>> weights;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    const std::string& tag = toks[0];
    if (tag == "c") {
      auto pos = raw.find('c');
      std::string rest = raw.substr(pos + 1);
      if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
      inst.comments.push_back(rest);
      continue;
    }
    if (tag == "p") {
      if (have_header) throw ParseError(line, "duplicate header");
      if (toks.size() != 4) throw ParseError(line, "header must be 'p <problem> <n> <m>'");
      try {
        inst.problem = parse_problem(toks[1]);
        inst.n = std::stoi(toks[2]);
        m = std::stoi(toks[3]);
      } catch (const std::exception& e) {
        throw ParseError(line, std::string("bad header: ") + e.what());
      }
      if (inst.n < 0 || m < 0) throw ParseError(line, "negative counts");
      weights.assign(inst.n, std::nullopt);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line, "record before header");
    if (tag == "v") {
      if (toks.size() != 3) throw ParseError(line, "vertex record must be 'v <id> <weight>'");
      if (inst.problem == Problem::Weds) throw ParseError(line, "weds instances carry edge weights only");
      int id = parse_id(toks[1], inst.n, line);
      if (weights[id]) throw ParseError(line, "duplicate vertex record");
      weights[id] = parse_weight(toks[2], line);
      continue;
    }
    if (tag == "e" || tag == "h" || tag == "a") {
      records.push_back({tag[0], {toks.begin() + 1, toks.end()}, line});
      continue;
    }
    throw ParseError(line, "unknown record '" + tag + "'");
  }
  if (!have_header) throw ParseError(std::max(line, 1), "missing header");

  auto weight_of = [&](int v) { return weights[v] ? *weights[v] : Weight(1); };
  switch (inst.problem) {
    case Problem::Wvc:
      inst.graph = WeightedGraph(inst.n);
      for (int v = 0; v < inst.n; ++v) inst.graph.add_vertex(v, weight_of(v));
      break;
    case Problem::W3hs:
      inst.hypergraph = WeightedHypergraph(inst.n);
      for (int v = 0; v < inst.n; ++v) inst.hypergraph.add_vertex(v, weight_of(v));
      break;
    case Problem::Weds:
      inst.edge_graph = EdgeWeightedGraph(inst.n);
      break;
    case Problem::Wiob:
      inst.digraph = WeightedDigraph(inst.n);
      for (int v = 0; v < inst.n; ++v) inst.digraph.add_vertex(v, weight_of(v));
      break;
  }
  const char expected = inst.problem == Problem::W3hs ? 'h' : inst.problem == Problem::Wiob ? 'a' : 'e';
  for (const auto& r : records) {
    if (r.kind != expected)
      throw ParseError(r.line, std::string("record '") + r.kind + "' not valid for " + to_string(inst.problem));
    try {
      switch (inst.problem) {
        case Problem::Wvc: {
          if (r.toks.size() != 2) throw ParseError(r.line, "edge record must be 'e <u> <v>'");
          int u = parse_id(r.toks[0], inst.n, r.line), v = parse_id(r.toks[1], inst.n, r.line);
          if (inst.graph.adjacent(u, v)) throw ParseError(r.line, "duplicate edge");
          inst.graph.add_edge(u, v);
          break;
        }
        case Problem::W3hs: {
          if (r.toks.size() < 2 || r.toks.size() > 3) throw ParseError(r.line, "hyperedge needs 2 or 3 vertices");
          std::vector<VertexId> vs;
          for (const auto& t : r.toks) vs.push_back(parse_id(t, inst.n, r.line));
          std::size_t before = inst.hypergraph.edges().size();
          if (make_set(vs).size() != vs.size()) throw ParseError(r.line, "repeated vertex in hyperedge");
          inst.hypergraph.add_edge(vs);
          if (inst.hypergraph.edges().size() == before) throw ParseError(r.line, "duplicate hyperedge");
          break;
        }
        case Problem::Weds: {
          if (r.toks.size() < 2 || r.toks.size() > 3) throw ParseError(r.line, "edge record must be 'e <u> <v> [w]'");
          int u = parse_id(r.toks[0], inst.n, r.line), v = parse_id(r.toks[1], inst.n, r.line);
          Weight w = r.toks.size() == 3 ? parse_weight(r.toks[2], r.line) : Weight(1);
          inst.edge_graph.add_edge(u, v, w);
          break;
        }
        case Problem::Wiob: {
          if (r.toks.size() != 2) throw ParseError(r.line, "arc record must be 'a <u> <v>'");
          int u = parse_id(r.toks[0], inst.n, r.line), v = parse_id(r.toks[1], inst.n, r.line);
          if (inst.digraph.has_arc(u, v)) throw ParseError(r.line, "duplicate arc");
          inst.digraph.add_arc(u, v);
          break;
        }
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(r.line, e.what());
    }
  }
  if (inst.num_records() != m)
    throw ParseError(line, "header announces " + std::to_string(m) + " records, found " +
                               std::to_string(inst.num_records()));
  return inst;
}

Instance read_instance_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_instance(ss.str());
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  for (const auto& c : inst.comments) out << "c " << c << "\n";
  out << "p " << to_string(inst.problem) << " " << inst.n << " " << inst.num_records() << "\n";
  auto vertex_lines = [&](auto const& g) {
    for (int v = 0; v < inst.n; ++v) out << "v " << v + 1 << " " << g.weight(v).str() << "\n";
  };
  switch (inst.problem) {
    case Problem::Wvc:
      vertex_lines(inst.graph);
      for (const auto& [u, v] : inst.graph.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
      break;
    case Problem::W3hs:
      vertex_lines(inst.hypergraph);
      for (const auto& e : inst.hypergraph.edges()) {
        out << "h";
        for (VertexId x : e) out << " " << x + 1;
        out << "\n";
      }
      break;
    case Problem::Weds:
      for (const auto& [u, v] : inst.edge_graph.edges())
        out << "e " << u + 1 << " " << v + 1 << " " << inst.edge_graph.weight(u, v).str() << "\n";
      break;
    case Problem::Wiob:
      vertex_lines(inst.digraph);
      for (const auto& [u, v] : inst.digraph.arcs()) out << "a " << u + 1 << " " << v + 1 << "\n";
      break;
  }
  return out.str();
}

nlohmann::json vertex_list(const VertexSet& vs) {
  nlohmann::json j = nlohmann::json::array();
  for (VertexId v : vs) j.push_back(v + 1);
  return j;
}

nlohmann::json edge_list(const EdgeSet& es) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [u, v] : es) j.push_back({u + 1, v + 1});
  return j;
}

nlohmann::json out_tree_json(const OutTree& t) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const auto& [c, p] : t.parent) arcs.push_back({p + 1, c + 1});
  return {{"root", t.root + 1}, {"arcs", arcs}, {"internal", vertex_list(t.internal())}};
}

std::string serialize_result(const SolveReport& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["problem"] = to_string(r.problem);
  j["solver"] = r.solver;
  j["status"] = r.solved ? "solved" : "nil";
  j["solution"] = r.solved ? r.solution : nlohmann::json();
  j["weight"] = r.weight ? nlohmann::json(r.weight->str()) : nlohmann::json();
  j["achieved_k"] = r.achieved_k;
  if (r.stats) {
    nlohmann::json s;
    s["nodes"] = r.stats->nodes;
    s["memo_hits"] = r.stats->memo_hits;
    s["fallback_branches"] = r.stats->fallback_branches;
    s["cubic_debt_violations"] = r.stats->cubic_debt_violations;
    s["rule_fires"] = r.stats->rule_fires;
    j["stats"] = s;
  }
  return j.dump(2);
}

}  // namespace wfpt::io

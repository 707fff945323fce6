#include "graphonlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace graphonlab {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot write file: " + path);
  out << contents;
}

ParsedGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      auto pos = line.find('#');
      if (pos != std::string::npos) line.erase(pos);
      bool blank = line.find_first_not_of(" \t\r\n") == std::string::npos;
      if (!blank) {
        out = line;
        return true;
      }
    }
    return false;
  };

  std::string header;
  if (!next_line(header)) throw parse_error("graph text: missing header line");
  std::istringstream hs(header);
  int n = 0, m = 0;
  if (!(hs >> n >> m) || n < 0 || m < 0) throw parse_error("graph text: header must be 'n m'");

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    std::string edge_line;
    if (!next_line(edge_line)) throw parse_error("graph text: expected " + std::to_string(m) + " edge lines");
    std::istringstream es(edge_line);
    int u = 0, v = 0;
    if (!(es >> u >> v)) throw parse_error("graph text: bad edge line '" + edge_line + "'");
    edges.emplace_back(u, v);
  }

  ParsedGraph out;
  std::string extra;
  while (next_line(extra)) {
    std::istringstream es(extra);
    std::string tag;
    es >> tag;
    std::vector<int>* dest = nullptr;
    if (tag == "roots:") dest = &out.roots;
    else if (tag == "parts:") dest = &out.parts;
    else throw parse_error("graph text: unknown trailing line '" + extra + "'");
    int v;
    while (es >> v) dest->push_back(v);
  }

  out.graph = Graph(n, edges);
  if (!out.roots.empty()) RootedGraph(out.graph, out.roots);  // validates
  if (!out.parts.empty() && static_cast<int>(out.parts.size()) != n) {
    throw parse_error("graph text: parts line must list one label per vertex");
  }
  return out;
}

ParsedGraph load_graph_file(const std::string& path) {
  try {
    return parse_graph_text(read_file(path));
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

std::string graph_to_text(const Graph& g, const std::vector<int>& roots, const std::vector<int>& parts) {
  std::ostringstream out;
  auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  if (!roots.empty()) {
    out << "roots:";
    for (int r : roots) out << ' ' << r;
    out << '\n';
  }
  if (!parts.empty()) {
    out << "parts:";
    for (int p : parts) out << ' ' << p;
    out << '\n';
  }
  return out.str();
}

namespace {

Graphon graphon_from_json(const json& j, const std::string& context) {
  if (!j.is_object() || !j.contains("kind")) throw parse_error(context + ": graphon spec needs a 'kind' field");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") return constant_graphon(j.at("p").get<double>());
  if (kind == "half") return half_graphon();
  if (kind == "rademacher") return rademacher_graphon();
  if (kind == "norine") return norine_graphon(j.at("d").get<int>());
  if (kind == "step") {
    return step_graphon(j.at("sizes").get<std::vector<double>>(),
                        j.at("matrix").get<std::vector<std::vector<double>>>());
  }
  if (kind == "grid") {
    if (j.contains("matrix")) return grid_graphon(j.at("matrix").get<std::vector<std::vector<double>>>());
    if (j.contains("csv")) {
      std::istringstream in(read_file(j.at("csv").get<std::string>()));
      std::vector<std::vector<double>> rows;
      std::string line;
      while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r\n,") == std::string::npos) continue;
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
      }
      return grid_graphon(rows);
    }
    throw parse_error(context + ": grid graphon needs 'matrix' or 'csv'");
  }
  throw parse_error(context + ": unknown graphon kind '" + kind + "'");
}

}  // namespace

Graphon graphon_from_json_text(const std::string& text, const std::string& context) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(context + ": " + e.what());
  }
  return graphon_from_json(j, context);
}

Graphon load_graphon(const std::string& spec_or_path) {
  const std::string prefix = "builtin:";
  if (spec_or_path.rfind(prefix, 0) == 0) {
    std::string rest = spec_or_path.substr(prefix.size());
    std::string name = rest, param;
    auto colon = rest.find(':');
    if (colon != std::string::npos) {
      name = rest.substr(0, colon);
      param = rest.substr(colon + 1);
    }
    try {
      if (name == "half") return half_graphon();
      if (name == "rademacher") return rademacher_graphon();
      if (name == "constant") return constant_graphon(param.empty() ? 0.5 : std::stod(param));
      if (name == "norine") return norine_graphon(param.empty() ? 1 : std::stoi(param));
    } catch (const error&) {
      throw;
    } catch (const std::exception& e) {
      throw parse_error(spec_or_path + ": " + e.what());
    }
    throw parse_error("unknown builtin graphon '" + spec_or_path + "'");
  }
  return graphon_from_json_text(read_file(spec_or_path), spec_or_path);
}

namespace {

struct TermPattern {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> roots;
  std::vector<int> parts;
  std::vector<std::pair<int, int>> free_pairs;
};

Expression term_expression(const TermPattern& p) {
  std::optional<Expression> total;
  int f = static_cast<int>(p.free_pairs.size());
  if (f > 16) throw parse_error("graph term: too many free pairs");
  for (int mask = 0; mask < (1 << f); ++mask) {
    auto edges = p.edges;
    for (int b = 0; b < f; ++b) {
      if ((mask >> b) & 1) edges.push_back(p.free_pairs[static_cast<std::size_t>(b)]);
    }
    Graph g(p.n, edges);
    Expression term = !p.parts.empty() ? Expression::term(DecoratedGraph(g, p.roots, p.parts))
                      : !p.roots.empty() ? Expression::term(RootedGraph(g, p.roots))
                                         : Expression::term(g);
    total = total ? *total + term : term;
  }
  return *total;
}

Expression expression_from_json(const json& j, const std::string& context) {
  if (j.is_number()) return Expression::constant(j.get<double>());
  if (!j.is_object()) throw parse_error(context + ": expression must be a number or an object");
  if (j.contains("const")) return Expression::constant(j.at("const").get<double>());
  if (j.contains("sum") || j.contains("product")) {
    bool is_sum = j.contains("sum");
    const json& list = is_sum ? j.at("sum") : j.at("product");
    if (!list.is_array() || list.empty()) throw parse_error(context + ": sum/product needs a non-empty array");
    std::optional<Expression> acc;
    for (const json& item : list) {
      Expression e = expression_from_json(item, context);
      acc = acc ? (is_sum ? *acc + e : *acc * e) : e;
    }
    return *acc;
  }
  if (j.contains("unlabel")) return Expression::unlabeled(expression_from_json(j.at("unlabel"), context));
  if (j.contains("graph_file")) {
    ParsedGraph g = load_graph_file(j.at("graph_file").get<std::string>());
    TermPattern p;
    p.n = g.graph.order();
    p.edges = g.graph.edges();
    p.roots = g.roots;
    p.parts = g.parts;
    return term_expression(p);
  }
  if (j.contains("graph")) {
    const json& gj = j.at("graph");
    TermPattern p;
    p.n = gj.at("n").get<int>();
    if (gj.contains("edges")) {
      for (const auto& e : gj.at("edges")) p.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    if (gj.contains("roots")) p.roots = gj.at("roots").get<std::vector<int>>();
    if (gj.contains("parts")) p.parts = gj.at("parts").get<std::vector<int>>();
    if (gj.contains("free")) {
      for (const auto& e : gj.at("free")) p.free_pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return term_expression(p);
  }
  throw parse_error(context + ": unrecognized expression node");
}

}  // namespace

std::vector<ConstraintSpec> parse_constraints_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("constraints: ") + e.what());
  }
  if (!j.is_object() || !j.contains("constraints") || !j.at("constraints").is_array()) {
    throw parse_error("constraints: expected an object with a 'constraints' array");
  }
  std::vector<ConstraintSpec> out;
  int idx = 0;
  for (const json& cj : j.at("constraints")) {
    std::string name = cj.contains("name") ? cj.at("name").get<std::string>() : "constraint-" + std::to_string(idx);
    try {
      Expression lhs = expression_from_json(cj.at("lhs"), name);
      Expression rhs = expression_from_json(cj.at("rhs"), name);
      ConstraintSpec spec{Constraint::make(name, lhs, rhs), 1e-3};
      if (cj.contains("tol")) spec.tol = cj.at("tol").get<double>();
      out.push_back(std::move(spec));
    } catch (const json::exception& e) {
      throw parse_error(name + ": " + e.what());
    }
    ++idx;
  }
  return out;
}

std::vector<ConstraintSpec> load_constraints(const std::string& path) {
  try {
    return parse_constraints_text(read_file(path));
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

}  // namespace graphonlab

#pragma once

#include <string>
#include <vector>

#include "graphonlab/expressions.hpp"
#include "graphonlab/graph.hpp"
#include "graphonlab/graphon.hpp"

namespace graphonlab {

// Graph text format: first line "n m", then m lines "u v" (0-based), then
// optional trailing lines "roots: i j ..." and "parts: p0 p1 ...".
struct ParsedGraph {
  Graph graph;
  std::vector<int> roots;
  std::vector<int> parts;

  bool rooted() const { return !roots.empty(); }
  bool decorated() const { return !parts.empty(); }
};

ParsedGraph parse_graph_text(const std::string& text);
ParsedGraph load_graph_file(const std::string& path);
std::string graph_to_text(const Graph& g, const std::vector<int>& roots = {}, const std::vector<int>& parts = {});

// Graphon from "builtin:NAME[:param]" (constant, step via file only, half,
// rademacher, norine) or from a JSON spec file with a "kind" field.
Graphon load_graphon(const std::string& spec_or_path);
Graphon graphon_from_json_text(const std::string& text, const std::string& context = "<json>");

struct ConstraintSpec {
  Constraint constraint;
  double tol = 1e-3;
};

// Constraint file: JSON {"constraints": [{"name", "lhs", "rhs", "tol"}]};
// expression nodes are {"const"}, {"graph"} / {"graph_file"}, {"sum": [...]},
// {"product": [...]}, {"unlabel"}. Graph objects take "n", "edges", optional
// "roots", "parts", and "free" (pairs summed over present/absent).
std::vector<ConstraintSpec> load_constraints(const std::string& path);
std::vector<ConstraintSpec> parse_constraints_text(const std::string& text);

std::string format_double(double v);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace graphonlab

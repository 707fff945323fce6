#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "graphonlab/errors.hpp"

namespace graphonlab {

// Exhaustive permutation search above this order is refused.
inline constexpr int kBruteForceCutoff = 8;

// Exact fraction with reduced numerator/denominator.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Rational() = default;
  Rational(std::uint64_t n, std::uint64_t d);
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

Rational rational_sum(const std::vector<Rational>& terms);

// Finite simple graph. Immutable after construction; adjacency is kept as a
// packed bitset so sampled graphs up to 2^14 vertices stay compact.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  Graph(int order, const std::vector<std::pair<int, int>>& edges);
  Graph(int order, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return order_; }
  int edge_count() const { return edge_count_; }
  bool adjacent(int u, int v) const {
    return u != v && (rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1u;
  }
  int degree(int v) const;
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& o) const { return order_ == o.order_ && rows_ == o.rows_; }

  static Graph empty(int order) { return Graph(order); }
  static Graph complete(int order);
  static Graph path(int order);
  static Graph cycle(int order);
  static Graph single_edge() { return Graph(2, {{0, 1}}); }
  static Graph single_vertex() { return Graph(1); }
  static Graph triangle() { return complete(3); }
  // Path on 3 vertices with the middle vertex last: edges {0,2},{1,2}.
  static Graph cherry() { return Graph(3, {{0, 2}, {1, 2}}); }

 private:
  void set_edge(int u, int v);

  int order_ = 0;
  int edge_count_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Graph with an ordered list of distinguished root vertices (labels are the
// positions in the list).
class RootedGraph {
 public:
  RootedGraph(Graph base, std::vector<int> roots);

  const Graph& graph() const { return base_; }
  const std::vector<int>& roots() const { return roots_; }
  int root_count() const { return static_cast<int>(roots_.size()); }
  int non_root_count() const { return base_.order() - root_count(); }
  bool is_root(int v) const;

  // Subgraph induced by the roots, with vertex i the i-th root.
  Graph root_graph() const;

  static RootedGraph rooted_edge() { return {Graph::single_edge(), {0}}; }

 private:
  Graph base_;
  std::vector<int> roots_;
};

// Sizes and degrees of the parts of a partitioned graphon. Parts are
// identified with consecutive subintervals of [0,1] in index order.
struct PartitionSpec {
  std::vector<double> sizes;    // positive, summing to 1
  std::vector<double> degrees;  // pairwise distinct, in [0,1]

  PartitionSpec() = default;
  PartitionSpec(std::vector<double> sizes_, std::vector<double> degrees_);

  int part_count() const { return static_cast<int>(sizes.size()); }
  double part_start(int p) const;
  double part_end(int p) const { return part_start(p) + sizes[static_cast<std::size_t>(p)]; }
  // Part containing x in [0,1]; the last part is closed on the right.
  int part_of(double x) const;

  bool operator==(const PartitionSpec&) const = default;
};

// Graph whose vertices carry part labels, optionally rooted.
class DecoratedGraph {
 public:
  DecoratedGraph(Graph base, std::vector<int> parts);
  DecoratedGraph(Graph base, std::vector<int> roots, std::vector<int> parts);

  const Graph& graph() const { return base_; }
  const std::vector<int>& roots() const { return roots_; }
  const std::vector<int>& parts() const { return parts_; }
  bool rooted() const { return !roots_.empty(); }
  int root_count() const { return static_cast<int>(roots_.size()); }
  RootedGraph rooted_view() const { return {base_, roots_}; }

  void validate_against(const PartitionSpec& spec) const;

 private:
  Graph base_;
  std::vector<int> roots_;  // may be empty
  std::vector<int> parts_;  // one label per vertex
};

// |Aut(G)| by exhaustive permutation check.
std::uint64_t automorphism_count(const Graph& g);
// Root-fixing automorphisms only.
std::uint64_t automorphism_count(const RootedGraph& g);
// Root-fixing, decoration-preserving automorphisms.
std::uint64_t automorphism_count(const DecoratedGraph& g);

bool are_isomorphic(const Graph& a, const Graph& b);
// Isomorphism must map the i-th root to the i-th root.
bool are_isomorphic(const RootedGraph& a, const RootedGraph& b);

// True iff the root-induced subgraphs agree under the label-preserving map.
bool rooted_compatible(const RootedGraph& a, const RootedGraph& b);

// Exact probability that |H| random distinct vertices of G induce a copy of
// H. Returns 0 when |H| > |G|.
Rational induced_density_finite(const Graph& h, const Graph& g);

// #subsets of V(G) of size |H| inducing a copy of H, and the total subset
// count, as (count, total).
std::pair<std::uint64_t, std::uint64_t> induced_subgraph_count(const Graph& h, const Graph& g);

std::uint64_t factorial(int n);

}  // namespace graphonlab

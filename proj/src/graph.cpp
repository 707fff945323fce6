#include "graphonlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace graphonlab {

namespace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a == 0 ? 1 : a;
}

// C(n, k) in 128-bit to survive large graphs; throws on overflow of the
// reduced value.
unsigned __int128 binomial128(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return r;
}

// Upper-triangle adjacency mask of the subgraph induced by verts (order <= 8).
std::uint32_t induced_mask(const Graph& g, const int* verts, int h) {
  std::uint32_t mask = 0;
  int bit = 0;
  for (int i = 0; i < h; ++i) {
    for (int j = i + 1; j < h; ++j, ++bit) {
      if (g.adjacent(verts[i], verts[j])) mask |= 1u << bit;
    }
  }
  return mask;
}

// All adjacency masks of graphs on |H| labeled vertices isomorphic to H.
std::unordered_set<std::uint32_t> isomorphic_masks(const Graph& h) {
  int n = h.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::unordered_set<std::uint32_t> masks;
  do {
    std::uint32_t mask = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++bit) {
        if (h.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) mask |= 1u << bit;
      }
    }
    masks.insert(mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return masks;
}

void check_cutoff(int order, const char* what) {
  if (order > kBruteForceCutoff) {
    throw unsupported_error(std::string(what) + ": order " + std::to_string(order) + " exceeds brute-force cutoff " +
                            std::to_string(kBruteForceCutoff));
  }
}

}  // namespace

Rational::Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
  if (d == 0) throw error("Rational: zero denominator");
  std::uint64_t g = gcd_u64(num, den);
  num /= g;
  den /= g;
}

Rational rational_sum(const std::vector<Rational>& terms) {
  // Small test corpora only; 128-bit intermediates keep this exact.
  unsigned __int128 num = 0, den = 1;
  for (const Rational& t : terms) {
    num = num * t.den + den * t.num;
    den = den * t.den;
    unsigned __int128 a = num, b = den;
    while (b != 0) {
      unsigned __int128 r = a % b;
      a = b;
      b = r;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
  }
  if (num > ~0ull || den > ~0ull) throw error("rational_sum: overflow");
  return Rational(static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den));
}

Graph::Graph(int order) : order_(order) {
  if (order < 0) throw error("Graph: negative order");
  words_ = static_cast<std::size_t>((order + 63) / 64);
  rows_.assign(static_cast<std::size_t>(order) * words_, 0);
}

Graph::Graph(int order, const std::vector<std::pair<int, int>>& edges) : Graph(order) {
  for (auto [u, v] : edges) set_edge(u, v);
}

Graph::Graph(int order, std::initializer_list<std::pair<int, int>> edges) : Graph(order) {
  for (auto [u, v] : edges) set_edge(u, v);
}

void Graph::set_edge(int u, int v) {
  if (u == v) throw error("Graph: self-loop");
  if (u < 0 || v < 0 || u >= order_ || v >= order_) throw error("Graph: edge endpoint out of range");
  if (adjacent(u, v)) return;
  rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] |= 1ull << (v & 63);
  rows_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(u >> 6)] |= 1ull << (u & 63);
  ++edge_count_;
}

int Graph::degree(int v) const {
  int d = 0;
  for (std::size_t w = 0; w < words_; ++w) {
    d += std::popcount(rows_[static_cast<std::size_t>(v) * words_ + w]);
  }
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < order_; ++u) {
    for (int v = u + 1; v < order_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::complete(int order) {
  Graph g(order);
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) g.set_edge(u, v);
  }
  return g;
}

Graph Graph::path(int order) {
  Graph g(order);
  for (int v = 0; v + 1 < order; ++v) g.set_edge(v, v + 1);
  return g;
}

Graph Graph::cycle(int order) {
  if (order < 3) throw error("Graph::cycle: order must be at least 3");
  Graph g = path(order);
  g.set_edge(order - 1, 0);
  return g;
}

RootedGraph::RootedGraph(Graph base, std::vector<int> roots) : base_(std::move(base)), roots_(std::move(roots)) {
  std::vector<int> sorted = roots_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw error("RootedGraph: duplicate root");
  for (int r : roots_) {
    if (r < 0 || r >= base_.order()) throw error("RootedGraph: root out of range");
  }
}

bool RootedGraph::is_root(int v) const { return std::find(roots_.begin(), roots_.end(), v) != roots_.end(); }

Graph RootedGraph::root_graph() const {
  int m = root_count();
  Graph g(m);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (base_.adjacent(roots_[static_cast<std::size_t>(i)], roots_[static_cast<std::size_t>(j)]))
        edges.emplace_back(i, j);
    }
  }
  return Graph(m, edges);
}

PartitionSpec::PartitionSpec(std::vector<double> sizes_, std::vector<double> degrees_)
    : sizes(std::move(sizes_)), degrees(std::move(degrees_)) {
  if (sizes.empty() || sizes.size() != degrees.size()) throw error("PartitionSpec: sizes/degrees mismatch");
  double total = 0;
  for (double a : sizes) {
    if (a <= 0) throw error("PartitionSpec: part sizes must be positive");
    total += a;
  }
  if (std::abs(total - 1.0) > 1e-12) throw error("PartitionSpec: part sizes must sum to 1");
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 0 || degrees[i] > 1) throw error("PartitionSpec: degrees must lie in [0,1]");
    for (std::size_t j = i + 1; j < degrees.size(); ++j) {
      if (degrees[i] == degrees[j]) throw error("PartitionSpec: degrees must be pairwise distinct");
    }
  }
}

double PartitionSpec::part_start(int p) const {
  double s = 0;
  for (int q = 0; q < p; ++q) s += sizes[static_cast<std::size_t>(q)];
  return s;
}

int PartitionSpec::part_of(double x) const {
  double s = 0;
  for (int p = 0; p < part_count(); ++p) {
    s += sizes[static_cast<std::size_t>(p)];
    if (x < s) return p;
  }
  return part_count() - 1;
}

DecoratedGraph::DecoratedGraph(Graph base, std::vector<int> parts)
    : DecoratedGraph(std::move(base), {}, std::move(parts)) {}

DecoratedGraph::DecoratedGraph(Graph base, std::vector<int> roots, std::vector<int> parts)
    : base_(std::move(base)), roots_(std::move(roots)), parts_(std::move(parts)) {
  if (static_cast<int>(parts_.size()) != base_.order()) throw error("DecoratedGraph: one part label per vertex required");
  if (!roots_.empty()) RootedGraph(base_, roots_);  // validates roots
}

void DecoratedGraph::validate_against(const PartitionSpec& spec) const {
  for (int p : parts_) {
    if (p < 0 || p >= spec.part_count()) throw error("DecoratedGraph: part label out of range for partition");
  }
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

namespace {

bool perm_is_isomorphism(const Graph& a, const Graph& b, const std::vector<int>& map) {
  int n = a.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (a.adjacent(u, v) != b.adjacent(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]))
        return false;
    }
  }
  return true;
}

}  // namespace

std::uint64_t automorphism_count(const Graph& g) {
  check_cutoff(g.order(), "automorphism_count");
  int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    if (perm_is_isomorphism(g, g, perm)) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::uint64_t automorphism_count(const RootedGraph& g) {
  check_cutoff(g.graph().order(), "automorphism_count");
  int n = g.graph().order();
  std::vector<int> free_verts;
  for (int v = 0; v < n; ++v) {
    if (!g.is_root(v)) free_verts.push_back(v);
  }
  std::vector<int> order = free_verts;
  std::vector<int> map(static_cast<std::size_t>(n));
  std::uint64_t count = 0;
  do {
    std::iota(map.begin(), map.end(), 0);
    for (std::size_t i = 0; i < free_verts.size(); ++i) map[static_cast<std::size_t>(free_verts[i])] = order[i];
    if (perm_is_isomorphism(g.graph(), g.graph(), map)) ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return count;
}

std::uint64_t automorphism_count(const DecoratedGraph& g) {
  check_cutoff(g.graph().order(), "automorphism_count");
  int n = g.graph().order();
  RootedGraph rooted(g.graph(), g.roots());
  std::vector<int> free_verts;
  for (int v = 0; v < n; ++v) {
    if (!rooted.is_root(v)) free_verts.push_back(v);
  }
  std::vector<int> order = free_verts;
  std::vector<int> map(static_cast<std::size_t>(n));
  std::uint64_t count = 0;
  do {
    std::iota(map.begin(), map.end(), 0);
    bool parts_ok = true;
    for (std::size_t i = 0; i < free_verts.size(); ++i) {
      map[static_cast<std::size_t>(free_verts[i])] = order[i];
      if (g.parts()[static_cast<std::size_t>(free_verts[i])] != g.parts()[static_cast<std::size_t>(order[i])]) {
        parts_ok = false;
      }
    }
    if (parts_ok && perm_is_isomorphism(g.graph(), g.graph(), map)) ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return count;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  check_cutoff(a.order(), "are_isomorphic");
  if (a.edge_count() != b.edge_count()) return false;
  int n = a.order();
  std::vector<int> da, db;
  for (int v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm_is_isomorphism(a, b, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool are_isomorphic(const RootedGraph& a, const RootedGraph& b) {
  if (a.graph().order() != b.graph().order() || a.root_count() != b.root_count()) return false;
  check_cutoff(a.graph().order(), "are_isomorphic");
  int n = a.graph().order();
  std::vector<int> free_a, free_b;
  for (int v = 0; v < n; ++v) {
    if (!a.is_root(v)) free_a.push_back(v);
  }
  for (int v = 0; v < n; ++v) {
    if (!b.is_root(v)) free_b.push_back(v);
  }
  std::vector<int> order = free_b;
  std::sort(order.begin(), order.end());
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  do {
    for (int i = 0; i < a.root_count(); ++i) {
      map[static_cast<std::size_t>(a.roots()[static_cast<std::size_t>(i)])] =
          b.roots()[static_cast<std::size_t>(i)];
    }
    for (std::size_t i = 0; i < free_a.size(); ++i) map[static_cast<std::size_t>(free_a[i])] = order[i];
    if (perm_is_isomorphism(a.graph(), b.graph(), map)) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

bool rooted_compatible(const RootedGraph& a, const RootedGraph& b) {
  if (a.root_count() != b.root_count()) return false;
  int m = a.root_count();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      bool ea = a.graph().adjacent(a.roots()[static_cast<std::size_t>(i)], a.roots()[static_cast<std::size_t>(j)]);
      bool eb = b.graph().adjacent(b.roots()[static_cast<std::size_t>(i)], b.roots()[static_cast<std::size_t>(j)]);
      if (ea != eb) return false;
    }
  }
  return true;
}

std::pair<std::uint64_t, std::uint64_t> induced_subgraph_count(const Graph& h, const Graph& g) {
  int hn = h.order();
  int gn = g.order();
  check_cutoff(hn, "induced_subgraph_count");
  unsigned __int128 total128 = binomial128(gn, hn);
  if (total128 > ~0ull) throw unsupported_error("induced_subgraph_count: too many subsets");
  std::uint64_t total = static_cast<std::uint64_t>(total128);
  if (hn > gn) return {0, total == 0 ? 1 : total};
  if (hn == 0) return {1, 1};

  auto masks = isomorphic_masks(h);
  std::vector<int> idx(static_cast<std::size_t>(hn));
  std::iota(idx.begin(), idx.end(), 0);
  std::uint64_t count = 0;
  while (true) {
    if (masks.count(induced_mask(g, idx.data(), hn)) != 0) ++count;
    // next combination
    int i = hn - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == gn - hn + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < hn; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return {count, total};
}

Rational induced_density_finite(const Graph& h, const Graph& g) {
  if (h.order() > g.order()) return Rational(0, 1);
  auto [count, total] = induced_subgraph_count(h, g);
  return Rational(count, total);
}

}  // namespace graphonlab

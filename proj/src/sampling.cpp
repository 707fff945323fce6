#include "graphonlab/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "graphonlab/density.hpp"
#include "graphonlab/rng.hpp"

namespace graphonlab {

namespace {

constexpr std::uint64_t kStreamCoords = 31;
constexpr std::uint64_t kStreamEdges = 32;
constexpr std::uint64_t kStreamSubsets = 33;

}  // namespace

std::vector<double> w_random_coordinates(int order, std::uint64_t seed) {
  CounterRng rng(seed, kStreamCoords);
  std::vector<double> xs(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) xs[static_cast<std::size_t>(i)] = rng.uniform(static_cast<std::uint64_t>(i));
  return xs;
}

Graph sample_w_random_graph(const Graphon& w, int order, std::uint64_t seed, int threads) {
  if (order < 1) throw error("sample_w_random_graph: order must be at least 1");
  if (order > kMaxSampleOrder) throw unsupported_error("sample_w_random_graph: order exceeds cap");
  std::vector<double> xs = w_random_coordinates(order, seed);
  CounterRng edges(seed, kStreamEdges);

  // Rows are filled in blocks; the pair randomness is indexed by (i, j), so
  // the adjacency is identical for every thread count.
  std::vector<std::vector<std::pair<int, int>>> block_edges(static_cast<std::size_t>(std::max(1, threads)) * 4);
  int blocks = static_cast<int>(block_edges.size());
  parallel_blocks(blocks, threads, [&](int b) {
    auto& out = block_edges[static_cast<std::size_t>(b)];
    for (int i = b; i < order; i += blocks) {
      for (int j = i + 1; j < order; ++j) {
        std::uint64_t ctr = static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(order) +
                            static_cast<std::uint64_t>(j);
        double p = w(xs[static_cast<std::size_t>(i)], xs[static_cast<std::size_t>(j)]);
        if (edges.uniform(ctr) < p) out.emplace_back(i, j);
      }
    }
  });
  std::vector<std::pair<int, int>> all;
  for (const auto& blk : block_edges) all.insert(all.end(), blk.begin(), blk.end());
  return Graph(order, all);
}

Estimate empirical_density(const Graph& h, const Graph& g, DensityMode mode, std::uint64_t budget,
                           std::uint64_t seed) {
  int hn = h.order();
  int gn = g.order();
  if (hn > kBruteForceCutoff) throw unsupported_error("empirical_density: pattern order exceeds cutoff");
  if (hn > gn) return Estimate::exact(0.0);

  if (mode == DensityMode::Exact) {
    double total = 1.0;
    for (int i = 0; i < hn; ++i) total = total * static_cast<double>(gn - i) / static_cast<double>(i + 1);
    if (total > 1e7) throw unsupported_error("empirical_density: exact mode budget exceeded");
    Rational r = induced_density_finite(h, g);
    Estimate e = Estimate::exact(r.to_double());
    e.method = Method::ExactStep;
    return e;
  }

  // uniform random |H|-subsets
  std::vector<std::uint32_t> masks;
  {
    // all adjacency masks isomorphic to H, by brute force over labelings
    std::vector<int> perm(static_cast<std::size_t>(hn));
    std::iota(perm.begin(), perm.end(), 0);
    std::unordered_set<std::uint32_t> set;
    do {
      std::uint32_t mask = 0;
      int bit = 0;
      for (int i = 0; i < hn; ++i) {
        for (int j = i + 1; j < hn; ++j, ++bit) {
          if (h.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) mask |= 1u << bit;
        }
      }
      set.insert(mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    masks.assign(set.begin(), set.end());
    std::sort(masks.begin(), masks.end());
  }

  CounterRng rng(seed, kStreamSubsets);
  std::uint64_t hits = 0;
  std::vector<int> pick(static_cast<std::size_t>(hn));
  for (std::uint64_t s = 0; s < budget; ++s) {
    // sample hn distinct vertices by rejection
    int got = 0;
    std::uint64_t ctr = s * static_cast<std::uint64_t>(hn) * 4;
    while (got < hn) {
      int v = static_cast<int>(rng.uniform(ctr++) * gn);
      v = std::min(v, gn - 1);
      bool dup = false;
      for (int i = 0; i < got; ++i) dup = dup || pick[static_cast<std::size_t>(i)] == v;
      if (!dup) pick[static_cast<std::size_t>(got++)] = v;
    }
    std::uint32_t mask = 0;
    int bit = 0;
    for (int i = 0; i < hn; ++i) {
      for (int j = i + 1; j < hn; ++j, ++bit) {
        if (g.adjacent(pick[static_cast<std::size_t>(i)], pick[static_cast<std::size_t>(j)])) mask |= 1u << bit;
      }
    }
    if (std::binary_search(masks.begin(), masks.end(), mask)) ++hits;
  }
  double p = static_cast<double>(hits) / static_cast<double>(budget);
  double se = std::sqrt(std::max(0.0, p * (1.0 - p) / static_cast<double>(budget)));
  return {p, se, budget, Method::MonteCarlo};
}

std::vector<ConvergenceRow> convergence_experiment(const Graphon& w, const Graph& h, const std::vector<int>& orders,
                                                   std::uint64_t seed, const EvalOptions& target_opts,
                                                   double* target_out) {
  for (std::size_t i = 1; i < orders.size(); ++i) {
    if (orders[i] <= orders[i - 1]) throw error("convergence_experiment: orders must increase");
  }
  double target = graphon_density(h, w, target_opts).value;
  if (target_out != nullptr) *target_out = target;
  std::vector<ConvergenceRow> rows;
  int run = 0;
  for (int n : orders) {
    Graph g = sample_w_random_graph(w, n, seed + static_cast<std::uint64_t>(run));
    double total_subsets = 1.0;
    for (int i = 0; i < h.order(); ++i) {
      total_subsets = total_subsets * static_cast<double>(n - i) / static_cast<double>(i + 1);
    }
    Estimate est = total_subsets <= 1e7 ? empirical_density(h, g, DensityMode::Exact)
                                        : empirical_density(h, g, DensityMode::Sampled, 200'000,
                                                            seed + static_cast<std::uint64_t>(run));
    rows.push_back({n, est.value, est.stderr_, std::abs(est.value - target)});
    ++run;
  }
  return rows;
}

}  // namespace graphonlab

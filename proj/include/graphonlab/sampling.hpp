#pragma once

#include <cstdint>
#include <vector>

#include "graphonlab/estimate.hpp"
#include "graphonlab/graph.hpp"
#include "graphonlab/graphon.hpp"

namespace graphonlab {

inline constexpr int kMaxSampleOrder = 1 << 14;

// W-random graph: k uniform coordinates, each pair joined independently with
// probability W(x_i, x_j). Bit-reproducible from the seed alone; the edge
// randomness is indexed per pair, so thread count does not matter.
Graph sample_w_random_graph(const Graphon& w, int order, std::uint64_t seed, int threads = 1);

// Coordinates used by sample_w_random_graph for the same (order, seed).
std::vector<double> w_random_coordinates(int order, std::uint64_t seed);

enum class DensityMode { Exact, Sampled };

// d(H, G) by exact subset enumeration (requires C(|G|,|H|) <= 10^7) or by
// uniform subset sampling.
Estimate empirical_density(const Graph& h, const Graph& g, DensityMode mode, std::uint64_t budget = 100'000,
                           std::uint64_t seed = 0);

struct ConvergenceRow {
  int order = 0;
  double estimate = 0.0;
  double stderr_ = 0.0;
  double deviation = 0.0;  // |estimate - d(H, W)|
};

// One W-random graph per order; the deviation column is measured against
// graphon_density(H, W) computed with target_opts.
std::vector<ConvergenceRow> convergence_experiment(const Graphon& w, const Graph& h, const std::vector<int>& orders,
                                                   std::uint64_t seed, const EvalOptions& target_opts = {},
                                                   double* target_out = nullptr);

}  // namespace graphonlab

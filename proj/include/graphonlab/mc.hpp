#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "graphonlab/estimate.hpp"
#include "graphonlab/rng.hpp"

namespace graphonlab {

// Blocked Monte Carlo mean of value(rng, sample_index) over budget samples.
// Samples are indexed globally and partial sums are merged in block order, so
// the result depends on (seed, budget) but not on the thread count.
template <typename F>
Estimate mc_mean(std::uint64_t budget, std::uint64_t seed, std::uint64_t stream, int threads, F&& value) {
  if (budget == 0) return {0.0, 0.0, 0, Method::MonteCarlo};
  CounterRng rng(seed, stream);
  int blocks = budget < 4096 ? 1 : 256;
  struct Acc {
    double sum = 0.0, sumsq = 0.0;
  };
  std::vector<Acc> accs(static_cast<std::size_t>(blocks));
  parallel_blocks(blocks, threads, [&](int b) {
    std::uint64_t begin = budget * static_cast<std::uint64_t>(b) / static_cast<std::uint64_t>(blocks);
    std::uint64_t end = budget * static_cast<std::uint64_t>(b + 1) / static_cast<std::uint64_t>(blocks);
    Acc a;
    for (std::uint64_t s = begin; s < end; ++s) {
      double v = value(rng, s);
      a.sum += v;
      a.sumsq += v * v;
    }
    accs[static_cast<std::size_t>(b)] = a;
  });
  double sum = 0.0, sumsq = 0.0;
  for (const Acc& a : accs) {
    sum += a.sum;
    sumsq += a.sumsq;
  }
  double n = static_cast<double>(budget);
  double mean = sum / n;
  double var = std::max(0.0, sumsq / n - mean * mean);
  double se = budget > 1 ? std::sqrt(var / (n - 1)) : 0.0;
  return {mean, se, budget, Method::MonteCarlo};
}

}  // namespace graphonlab

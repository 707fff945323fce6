#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace graphonlab {

// Counter-based generator: the value of draw #ctr on stream #stream is a pure
// function of (seed, stream, ctr). Estimators index draws by global sample
// number, so results do not depend on how samples are split across threads.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed ^ 0x9e3779b97f4a7c15ull) ^ mix(stream * 0xbf58476d1ce4e5b9ull + 1)) {}

  std::uint64_t bits(std::uint64_t ctr) const { return mix(key_ + ctr * 0x9e3779b97f4a7c15ull); }

  // uniform double in [0, 1)
  double uniform(std::uint64_t ctr) const {
    return static_cast<double>(bits(ctr) >> 11) * 0x1.0p-53;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_;
};

// Sequential counter interface on top of CounterRng, for call sites that just
// want a stream of draws (e.g. rejection sampling).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0) : rng_(seed, stream) {}
  double uniform() { return rng_.uniform(ctr_++); }
  std::uint64_t bits() { return rng_.bits(ctr_++); }

 private:
  CounterRng rng_;
  std::uint64_t ctr_ = 0;
};

// Runs fn(block_index) for block_index in [0, blocks) on up to `threads`
// threads. Callers accumulate per-block results and merge them in block
// order, which keeps floating-point reductions independent of thread count.
template <typename Fn>
void parallel_blocks(int blocks, int threads, Fn&& fn) {
  if (threads <= 1 || blocks <= 1) {
    for (int b = 0; b < blocks; ++b) fn(b);
    return;
  }
  std::vector<std::thread> pool;
  int nthreads = std::min(threads, blocks);
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) {
    pool.emplace_back([&fn, t, nthreads, blocks] {
      for (int b = t; b < blocks; b += nthreads) fn(b);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace graphonlab

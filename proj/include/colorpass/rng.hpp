#pragma once
#include <cstdint>
#include <random>
#include <vector>

namespace colorpass {

// Purpose tags for RNG substreams. Every randomized operation owns a tag, so
// adding draws to one purpose never shifts the values another purpose sees.
enum class RngStream : std::uint64_t {
  Partition = 1,    // balanced class assignment in planted generation
  Edges = 2,        // cross-class edge sampling
  Perturb = 3,      // coloring noise
  Clustering = 4,   // k-means seeding and restarts
  EigenStart = 5,   // Lanczos start vectors
  CodePairing = 6,  // LDPC configuration-model pairing
  Channel = 7,      // BSC bit flips
  Fallback = 8,     // degenerate-embedding random coloring
};

std::uint64_t splitmix64(std::uint64_t x);

// Seedable generator with platform-independent output. The engine is
// std::mt19937_64 (its raw stream is fixed by the standard); all derived draws
// below avoid std::*_distribution, whose outputs are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Substream derivation: the engine is seeded with
  // splitmix64(splitmix64(seed) ^ splitmix64(tag + salt * 0x9E3779B97F4A7C15)).
  static Rng substream(std::uint64_t seed, RngStream stream, std::uint64_t salt = 0);

  std::uint64_t next_u64() { return engine_(); }

  // Unbiased integer in [0, bound) via rejection sampling; bound > 0.
  std::uint64_t below(std::uint64_t bound);

  // Uniform double in [0, 1) with 53-bit resolution.
  double real01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return real01() < p; }

  // Fisher-Yates.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
    }
  }

  // k distinct values from [0, n), ascending.
  std::vector<int> sample_distinct(int n, int k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace colorpass

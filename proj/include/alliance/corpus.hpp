#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "alliance/graph.hpp"

namespace alliance {

// Deterministic random source. std::mt19937_64 has a standard-specified
// output sequence, and the helpers below derive values from raw engine words
// only, so corpora are identical across platforms and library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_word() { return engine_(); }

  // Uniform in [0, bound); bound >= 1. Rejection sampling, no modulo bias.
  std::uint64_t next_below(std::uint64_t bound);

  // Bernoulli with probability numerator/2^32.
  bool next_chance(std::uint32_t numerator) {
    return (next_word() >> 32) < numerator;
  }

 private:
  std::mt19937_64 engine_;
};

// G(n, p) with p = density_numerator/2^32 over each vertex pair.
Graph random_graph(Rng& rng, int n, std::uint32_t density_numerator);

std::vector<int> random_permutation(Rng& rng, int n);

// The standard seeded test corpus: `per_size` graphs for every n in
// [1, max_n], cycling through a fixed ladder of edge densities.
std::vector<Graph> random_corpus(std::uint64_t seed, int max_n, int per_size);

// Every labeled graph on n vertices, in lexicographic edge-mask order.
// 2^(n(n-1)/2) graphs, so keep n small; the callback may stop the sweep by
// returning false.
void for_each_graph(int n, const std::function<bool(const Graph&)>& fn);

}  // namespace alliance

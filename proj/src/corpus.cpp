#include "alliance/corpus.hpp"

#include <stdexcept>

namespace alliance {

std::uint64_t Rng::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be positive");
  std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
  for (;;) {
    std::uint64_t word = next_word();
    if (word < limit) return word % bound;
  }
}

Graph random_graph(Rng& rng, int n, std::uint32_t density_numerator) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_chance(density_numerator)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.next_below(static_cast<std::uint64_t>(i) + 1)]);
  return perm;
}

std::vector<Graph> random_corpus(std::uint64_t seed, int max_n, int per_size) {
  // Density ladder from sparse to dense, as fractions of 2^32.
  constexpr std::uint32_t kDensities[] = {
      858993459u,   // 0.20
      1503238553u,  // 0.35
      2147483648u,  // 0.50
      2791728742u,  // 0.65
      3435973836u,  // 0.80
  };
  Rng rng(seed);
  std::vector<Graph> corpus;
  corpus.reserve(static_cast<std::size_t>(max_n) * per_size);
  for (int n = 1; n <= max_n; ++n)
    for (int i = 0; i < per_size; ++i)
      corpus.push_back(random_graph(rng, n, kDensities[i % std::size(kDensities)]));
  return corpus;
}

void for_each_graph(int n, const std::function<bool(const Graph&)>& fn) {
  if (n < 1 || n > 8) throw std::invalid_argument("exhaustive sweep supports 1 <= n <= 8");
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1) edges.push_back(pairs[i]);
    if (!fn(Graph(n, edges))) return;
  }
}

}  // namespace alliance

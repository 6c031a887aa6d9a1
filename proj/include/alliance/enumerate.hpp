#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "alliance/graph.hpp"
#include "alliance/polynomial.hpp"

namespace alliance {

enum class Engine { oracle, connected };

// The oracle sweeps all 2^n - 1 subsets, so it gets a hard cap.
inline constexpr int kOracleMaxVertices = 24;
// Above this, enumeration refuses to run without a budget or allow_large.
inline constexpr int kUnbudgetedMaxVertices = 20;

struct EnumerateOptions {
  Engine engine = Engine::connected;
  // 0 means one worker per available thread. The result polynomial is
  // identical for every worker count.
  int workers = 0;
  // Wall-clock budget; exceeding it raises limit_error with no partial result.
  std::optional<std::chrono::milliseconds> budget;
  // Waives the no-budget size cap for n > kUnbudgetedMaxVertices.
  bool allow_large = false;
};

struct EnumerationStats {
  // Oracle: subsets tested. Connected engine: connected subsets expanded.
  std::uint64_t subsets_visited = 0;
  std::uint64_t alliances_found = 0;
  double elapsed_seconds = 0.0;
  Engine engine = Engine::connected;
  int workers_used = 1;
};

struct EnumerationResult {
  Polynomial polynomial;
  EnumerationStats stats;
};

// Computes the strong alliance polynomial: coefficient k counts the connected
// strong defensive alliances of cardinality k.
EnumerationResult enumerate_alliances(const Graph& g, const EnumerateOptions& opts = {});

// Convenience wrapper returning just the polynomial from the default engine.
Polynomial compute_polynomial(const Graph& g, const EnumerateOptions& opts = {});

// Reference implementation: tests every nonempty subset against the
// definitional predicate. Serial, n <= kOracleMaxVertices.
Polynomial compute_polynomial_oracle(const Graph& g);

// Number of nonempty vertex subsets inducing a connected subgraph.
// n <= kOracleMaxVertices.
mpz_class count_connected_subsets(const Graph& g);

}  // namespace alliance

#include "alliance/enumerate.hpp"

#include <omp.h>

#include <array>
#include <atomic>
#include <stdexcept>
#include <string>
#include <vector>

#include "alliance/alliance.hpp"
#include "alliance/errors.hpp"

namespace alliance {

namespace {

using Clock = std::chrono::steady_clock;

struct Accumulator {
  std::array<std::uint64_t, kMaxVertices + 1> by_size{};
  std::uint64_t visited = 0;
};

// Per-worker expansion state for the rooted connected-subset walk. Tracks
// deficit[v] = deg(v) - 2*deg_S(v), so v is undefended exactly when
// deficit[v] > 0, and a running count of undefended members of S.
class Walker {
 public:
  Walker(const Graph& g, bool count_all_sets, const Clock::time_point* deadline,
         std::atomic<bool>* expired)
      : g_(g), count_all_(count_all_sets), deadline_(deadline), expired_(expired) {
    deficit_.resize(g.n());
    for (int v = 0; v < g.n(); ++v) deficit_[v] = g.degree(v);
  }

  // Walks every connected superset of seed reachable without touching
  // banned vertices; seed itself is included.
  void expand(VertexSet seed, VertexSet banned, Accumulator& acc) {
    for (int v : seed) add(v);
    walk(seed, banned, acc);
    for (int v : seed) drop(v);
  }

 private:
  void add(int v) {
    for (int u : g_.adjacent_to(v)) {
      if (members_.contains(u) && deficit_[u] > 0 && deficit_[u] <= 2) --undefended_;
      deficit_[u] -= 2;
    }
    members_ = members_.with(v);
    if (deficit_[v] > 0) ++undefended_;
  }

  void drop(int v) {
    if (deficit_[v] > 0) --undefended_;
    members_ = members_.without(v);
    for (int u : g_.adjacent_to(v)) {
      deficit_[u] += 2;
      if (members_.contains(u) && (deficit_[u] == 1 || deficit_[u] == 2)) ++undefended_;
    }
  }

  void walk(VertexSet s, VertexSet banned, Accumulator& acc) {
    if (expired_ && expired_->load(std::memory_order_relaxed)) return;
    ++acc.visited;
    if (deadline_ && (acc.visited & 0x3FF) == 0 && Clock::now() > *deadline_)
      expired_->store(true, std::memory_order_relaxed);
    if (count_all_ || undefended_ == 0) ++acc.by_size[s.size()];
    VertexSet frontier = open_neighborhood(g_, s) - banned;
    for (int v : frontier) {
      add(v);
      walk(s.with(v), banned, acc);
      drop(v);
      banned = banned.with(v);
    }
  }

  const Graph& g_;
  bool count_all_;
  const Clock::time_point* deadline_;
  std::atomic<bool>* expired_;
  std::vector<int> deficit_;
  VertexSet members_;
  int undefended_ = 0;
};

// One independent unit of work: the subtree rooted at {root, first} with the
// banned set as it stood when `first` was chosen.
struct WorkItem {
  int root;
  int first;
  VertexSet banned;
};

int resolve_workers(int requested) {
  if (requested < 0) throw std::invalid_argument("worker count must be non-negative");
  if (requested == 0) return omp_get_max_threads();
  return requested;
}

std::optional<Clock::time_point> make_deadline(const EnumerateOptions& opts) {
  if (!opts.budget) return std::nullopt;
  if (opts.budget->count() <= 0) throw std::invalid_argument("budget must be positive");
  return Clock::now() + *opts.budget;
}

void enforce_size_policy(const Graph& g, const EnumerateOptions& opts) {
  if (g.n() > kUnbudgetedMaxVertices && !opts.budget && !opts.allow_large)
    throw limit_error("graphs with more than " + std::to_string(kUnbudgetedMaxVertices) +
                      " vertices need an explicit budget or the allow-large override");
}

Polynomial polynomial_from_counts(const Accumulator& acc, int n) {
  std::vector<mpz_class> coeffs(n + 1);
  for (int k = 0; k <= n; ++k) coeffs[k] = mpz_class(static_cast<unsigned long>(acc.by_size[k]));
  return Polynomial(std::move(coeffs));
}

// Counts sets via rooted expansion: every connected set is generated exactly
// once, from its minimum vertex, with lower-numbered vertices banned.
EnumerationResult run_connected(const Graph& g, const EnumerateOptions& opts,
                                bool count_all_sets) {
  enforce_size_policy(g, opts);
  int workers = resolve_workers(opts.workers);
  auto deadline = make_deadline(opts);
  const Clock::time_point* deadline_ptr = deadline ? &*deadline : nullptr;
  std::atomic<bool> expired{false};
  auto started = Clock::now();

  std::vector<WorkItem> items;
  for (int r = 0; r < g.n(); ++r) {
    VertexSet banned = VertexSet::full(r);
    for (int v : g.adjacent_to(r) - banned) {
      items.push_back({r, v, banned});
      banned = banned.with(v);
    }
  }

  std::vector<Accumulator> partial(workers);
  // Singletons are the expansion roots themselves; count them here so the
  // work items can start at size two.
  for (int r = 0; r < g.n(); ++r) {
    ++partial[0].visited;
    if (count_all_sets || g.degree(r) == 0) ++partial[0].by_size[1];
  }

#pragma omp parallel num_threads(workers)
  {
    Walker walker(g, count_all_sets, deadline_ptr, &expired);
    Accumulator& acc = partial[omp_get_thread_num()];
#pragma omp for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(items.size()); ++i) {
      if (expired.load(std::memory_order_relaxed)) continue;
      const WorkItem& w = items[i];
      walker.expand(VertexSet::of({w.root, w.first}), w.banned, acc);
    }
  }

  if (expired.load())
    throw limit_error("enumeration budget of " + std::to_string(opts.budget->count()) +
                      " ms exceeded");

  Accumulator total;
  for (const auto& acc : partial) {
    total.visited += acc.visited;
    for (int k = 0; k <= g.n(); ++k) total.by_size[k] += acc.by_size[k];
  }

  EnumerationResult result;
  result.polynomial = polynomial_from_counts(total, g.n());
  result.stats.subsets_visited = total.visited;
  for (int k = 0; k <= g.n(); ++k) result.stats.alliances_found += total.by_size[k];
  result.stats.elapsed_seconds = std::chrono::duration<double>(Clock::now() - started).count();
  result.stats.engine = Engine::connected;
  result.stats.workers_used = workers;
  return result;
}

EnumerationResult run_oracle(const Graph& g, const EnumerateOptions& opts) {
  if (g.n() > kOracleMaxVertices)
    throw limit_error("oracle cap is " + std::to_string(kOracleMaxVertices) + " vertices, got " +
                      std::to_string(g.n()));
  enforce_size_policy(g, opts);
  auto deadline = make_deadline(opts);
  auto started = Clock::now();
  Accumulator acc;
  const std::uint64_t limit = std::uint64_t{1} << g.n();
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    if (deadline && (bits & 0x1FFF) == 0 && Clock::now() > *deadline)
      throw limit_error("enumeration budget of " + std::to_string(opts.budget->count()) +
                        " ms exceeded");
    ++acc.visited;
    VertexSet s = VertexSet::from_mask(bits);
    if (is_strong_alliance_connected(g, s)) ++acc.by_size[s.size()];
  }
  EnumerationResult result;
  result.polynomial = polynomial_from_counts(acc, g.n());
  result.stats.subsets_visited = acc.visited;
  for (int k = 0; k <= g.n(); ++k) result.stats.alliances_found += acc.by_size[k];
  result.stats.elapsed_seconds = std::chrono::duration<double>(Clock::now() - started).count();
  result.stats.engine = Engine::oracle;
  result.stats.workers_used = 1;
  return result;
}

}  // namespace

EnumerationResult enumerate_alliances(const Graph& g, const EnumerateOptions& opts) {
  return opts.engine == Engine::oracle ? run_oracle(g, opts) : run_connected(g, opts, false);
}

Polynomial compute_polynomial(const Graph& g, const EnumerateOptions& opts) {
  return enumerate_alliances(g, opts).polynomial;
}

Polynomial compute_polynomial_oracle(const Graph& g) {
  EnumerateOptions opts;
  opts.engine = Engine::oracle;
  return enumerate_alliances(g, opts).polynomial;
}

mpz_class count_connected_subsets(const Graph& g) {
  if (g.n() > kOracleMaxVertices)
    throw limit_error("connected-subset count cap is " + std::to_string(kOracleMaxVertices) +
                      " vertices, got " + std::to_string(g.n()));
  EnumerationResult counted = run_connected(g, {}, true);
  mpz_class total = 0;
  for (const auto& c : counted.polynomial.coeffs()) total += c;
  return total;
}

}  // namespace alliance

// Times the subset-sweep reference against the connected-expansion engine at
// one and at all workers. Build target only; not part of the test suite.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "alliance/corpus.hpp"
#include "alliance/enumerate.hpp"
#include "alliance/families.hpp"
#include "alliance/graph.hpp"

namespace {

using alliance::Engine;
using alliance::EnumerateOptions;
using alliance::Graph;

double time_run(const Graph& g, const EnumerateOptions& opts, mpz_class& total_out) {
  auto start = std::chrono::steady_clock::now();
  auto res = alliance::enumerate_alliances(g, opts);
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  total_out = alliance::evaluate_at_one(res.polynomial);
  return elapsed;
}

void bench(const std::string& label, const Graph& g) {
  EnumerateOptions oracle, serial, parallel;
  oracle.engine = Engine::oracle;
  oracle.allow_large = true;
  serial.workers = 1;
  serial.allow_large = true;
  parallel.workers = 0;
  parallel.allow_large = true;

  mpz_class total;
  std::string oracle_cell = "      --";
  if (g.n() <= alliance::kOracleMaxVertices) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%8.3f", time_run(g, oracle, total));
    oracle_cell = buf;
  }
  double t1 = time_run(g, serial, total);
  double tn = time_run(g, parallel, total);

  std::printf("%-26s %3d %6d %s %9.3f %9.3f %7.2fx  %s\n", label.c_str(), g.n(), g.m(),
              oracle_cell.c_str(), t1, tn, tn > 0 ? t1 / tn : 0.0,
              total.get_str().c_str());
}

}  // namespace

int main() {
  std::printf("workers available: %d\n\n", omp_get_max_threads());
  std::printf("%-26s %3s %6s %8s %9s %9s %8s  %s\n", "graph", "n", "m", "sweep_s",
              "serial_s", "par_s", "speedup", "alliances");

  using alliance::family_graph;
  using alliance::FamilyKind;

  bench("path:24", family_graph({FamilyKind::path, 24, 0}));
  bench("cycle:24", family_graph({FamilyKind::cycle, 24, 0}));
  bench("complete:20", family_graph({FamilyKind::complete, 20, 0}));
  bench("complete_bipartite:10,10", family_graph({FamilyKind::complete_bipartite, 10, 10}));
  bench("double_star:10,10", family_graph({FamilyKind::double_star, 10, 10}));

  alliance::Rng rng(99);
  bench("random n=20 p=0.25", alliance::random_graph(rng, 20, 1073741824u));
  bench("random n=22 p=0.50", alliance::random_graph(rng, 22, 2147483648u));
  return 0;
}

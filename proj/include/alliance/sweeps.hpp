#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alliance/enumerate.hpp"
#include "alliance/families.hpp"

namespace alliance {

// One verified instance of a sweep; on failure `expected` holds the formula
// or theorem side and `actual` the enumerated side.
struct SweepInstance {
  std::string label;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct SweepOutcome {
  std::string name;
  std::vector<SweepInstance> instances;

  int failures() const {
    int count = 0;
    for (const auto& inst : instances) count += inst.pass ? 0 : 1;
    return count;
  }
  bool all_pass() const { return failures() == 0; }
};

struct SweepOptions {
  int max_n = 12;  // bound on total vertices per instance
  std::uint64_t seed = 1;
  int per_size = 100;  // random graphs per size where applicable
  DoubleStarForm double_star_form = DoubleStarForm::corrected;
  int workers = 0;
};

// Closed form vs oracle enumeration over every family instance within
// max_n total vertices.
SweepOutcome sweep_families(const SweepOptions& opts = {});

// Complete-bipartite product formula vs oracle for all side sizes.
SweepOutcome sweep_complete_bipartite(const SweepOptions& opts = {});

// Double-star formula (corrected or printed, per options) vs oracle.
SweepOutcome sweep_double_star(const SweepOptions& opts = {});

// Complete graph minus independent edges: removing up to n/2 - 1 must not
// change the polynomial (even n); removing one edge from odd K_n must; a
// perfect matching must change it and push min_support to n/2.
SweepOutcome sweep_kn_minus_edges(const SweepOptions& opts = {});

// Coefficient-structure checks on a seeded random corpus (n <= 8): the four
// report checks plus the vanishing-condition double enumeration.
SweepOutcome sweep_coefficient_checks(const SweepOptions& opts = {});

// Maps the CLI names {families, knm, double_star, kn_minus_edges, theorem26}
// to the sweeps above. Throws parse_error on an unknown name.
SweepOutcome run_named_sweep(const std::string& name, const SweepOptions& opts = {});

}  // namespace alliance

#pragma once

#include <optional>

#include "alliance/enumerate.hpp"
#include "alliance/graph.hpp"
#include "alliance/polynomial.hpp"

namespace alliance {

// Shape diagnostics of the coefficient window [min_support, degree]. Interior
// zeros stay inside the window and count as values.
struct SequenceVerdict {
  bool unimodal = false;
  // Cardinality of the (first) peak; present exactly when unimodal.
  std::optional<int> mode_index;
  // Strictly peaked: both neighbors of the mode, where present, are smaller.
  bool mode_unique = false;
  // Strict log-concavity at every interior window index. Windows shorter
  // than three entries hold vacuously; any interior zero fails.
  bool log_concave = false;

  friend bool operator==(const SequenceVerdict&, const SequenceVerdict&) = default;
};

// Throws std::invalid_argument on the zero polynomial.
SequenceVerdict sequence_verdict(const Polynomial& p);

// Coefficient-side vs graph-side agreement for the structural coefficient
// facts. Each flag is true when the two independently evaluated sides agree.
struct TheoremChecks {
  bool a2_le_m = false;
  bool a2_eq_m_iff_maxdeg_le_2 = false;
  bool an_eq_1_iff_connected = false;
  bool a2_eq_1_iff_unique_light_edge = false;

  bool all() const {
    return a2_le_m && a2_eq_m_iff_maxdeg_le_2 && an_eq_1_iff_connected &&
           a2_eq_1_iff_unique_light_edge;
  }
  friend bool operator==(const TheoremChecks&, const TheoremChecks&) = default;
};

struct AllianceReport {
  Polynomial polynomial;
  int alliance_number = 0;
  mpz_class total_alliances;
  SequenceVerdict verdict;
  TheoremChecks checks;

  friend bool operator==(const AllianceReport&, const AllianceReport&) = default;
};

// Enumerates the polynomial and evaluates every check from both sides.
AllianceReport build_report(const Graph& g, const EnumerateOptions& opts = {});

// Same, reusing an already-computed polynomial for g.
AllianceReport build_report(const Graph& g, Polynomial p);

// Consistency assertion: a polynomial of the exact form n*x (n = vertex
// count of g) may only arise from the edgeless graph. Vacuously true when p
// has any other shape.
bool check_empty_characterization(const Polynomial& p, const Graph& g);

// Double-enumeration cross-check of the vanishing condition, on the pure
// defense predicate with connectivity ignored: for every cardinality k,
// no k-subset is defended  <=>  every k-subset has a member v with
// deg_S(v) <= (deg(v)-1)/2. Also checks the sound half against the
// polynomial: when every k-subset has such a vertex, a_k must be 0.
// The graph must fit the oracle cap.
bool check_vanishing_condition(const Graph& g, const Polynomial& p);

}  // namespace alliance

#include "alliance/analysis.hpp"

#include <stdexcept>
#include <vector>

#include "alliance/alliance.hpp"
#include "alliance/errors.hpp"

namespace alliance {

SequenceVerdict sequence_verdict(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no coefficient window");
  const int lo = min_support(p);
  const int hi = p.degree();
  auto at = [&](int k) -> const mpz_class& { return p.coeff(k); };

  SequenceVerdict v;
  // Climb to the end of the first nondecreasing run, then require a
  // nonincreasing tail.
  int peak = lo;
  while (peak < hi && at(peak) <= at(peak + 1)) ++peak;
  v.unimodal = true;
  for (int k = peak; k < hi; ++k)
    if (at(k) < at(k + 1)) v.unimodal = false;
  if (v.unimodal) {
    // First index attaining the window maximum.
    int mode = lo;
    for (int k = lo + 1; k <= hi; ++k)
      if (at(k) > at(mode)) mode = k;
    v.mode_index = mode;
    bool left_strict = mode == lo || at(mode - 1) < at(mode);
    bool right_strict = mode == hi || at(mode) > at(mode + 1);
    v.mode_unique = left_strict && right_strict;
  }
  v.log_concave = true;
  for (int k = lo + 1; k <= hi - 1; ++k)
    if (!(at(k) * at(k) > at(k - 1) * at(k + 1))) v.log_concave = false;
  return v;
}

namespace {

// Edges whose endpoints both have degree at most 2; pairs of such endpoints
// are exactly the two-element alliances.
int count_light_edges(const Graph& g) {
  int count = 0;
  for (auto [u, v] : g.edges())
    if (g.degree(u) <= 2 && g.degree(v) <= 2) ++count;
  return count;
}

TheoremChecks evaluate_checks(const Graph& g, const Polynomial& p) {
  TheoremChecks c;
  const mpz_class& a2 = p.coeff(2);
  const mpz_class& an = p.coeff(g.n());
  c.a2_le_m = a2 <= g.m();
  c.a2_eq_m_iff_maxdeg_le_2 = (a2 == g.m()) == (g.max_degree() <= 2);
  c.an_eq_1_iff_connected = (an == 1) == g.is_connected();
  c.a2_eq_1_iff_unique_light_edge = (a2 == 1) == (count_light_edges(g) == 1);
  return c;
}

}  // namespace

AllianceReport build_report(const Graph& g, Polynomial p) {
  AllianceReport r;
  r.polynomial = std::move(p);
  r.alliance_number = min_support(r.polynomial);
  r.total_alliances = evaluate_at_one(r.polynomial);
  r.verdict = sequence_verdict(r.polynomial);
  r.checks = evaluate_checks(g, r.polynomial);
  return r;
}

AllianceReport build_report(const Graph& g, const EnumerateOptions& opts) {
  return build_report(g, compute_polynomial(g, opts));
}

bool check_empty_characterization(const Polynomial& p, const Graph& g) {
  bool claims_edgeless = p.degree() == 1 && p.coeff(1) == g.n();
  if (!claims_edgeless) return true;
  return g.m() == 0;
}

bool check_vanishing_condition(const Graph& g, const Polynomial& p) {
  if (g.n() > kOracleMaxVertices)
    throw limit_error("vanishing-condition check sweeps all subsets, cap is " +
                      std::to_string(kOracleMaxVertices) + " vertices");
  const int n = g.n();
  std::vector<std::uint64_t> defended(n + 1, 0);
  std::vector<std::uint64_t> all_deficient(n + 1, 0);
  std::vector<std::uint64_t> total(n + 1, 0);
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    VertexSet s = VertexSet::from_mask(bits);
    int k = s.size();
    ++total[k];
    if (is_defensive_alliance(g, s)) ++defended[k];
    bool deficient = false;
    for (int v : s)
      if (is_deficient(g, s, v)) {
        deficient = true;
        break;
      }
    if (deficient) ++all_deficient[k];
  }
  for (int k = 1; k <= n; ++k) {
    bool none_defended = defended[k] == 0;
    bool every_subset_deficient = all_deficient[k] == total[k];
    if (none_defended != every_subset_deficient) return false;
    if (every_subset_deficient && p.coeff(k) != 0) return false;
  }
  return true;
}

}  // namespace alliance

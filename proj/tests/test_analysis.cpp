#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "alliance/analysis.hpp"
#include "alliance/corpus.hpp"
#include "alliance/enumerate.hpp"
#include "alliance/errors.hpp"
#include "alliance/families.hpp"
#include "test_support.hpp"

using alliance::build_report;
using alliance::compute_polynomial;
using alliance::Graph;
using alliance::sequence_verdict;
using alliance::SequenceVerdict;
using testutil::poly_of;

TEST_CASE("verdicts on hand-built windows") {
  SequenceVerdict single = sequence_verdict(poly_of({0, 0, 1}));
  CHECK(single.unimodal);
  CHECK(single.mode_index == 2);
  CHECK(single.mode_unique);
  CHECK(single.log_concave);  // vacuous window

  SequenceVerdict peak = sequence_verdict(poly_of({0, 0, 0, 10, 5, 1}));
  CHECK(peak.unimodal);
  CHECK(peak.mode_index == 3);
  CHECK(peak.mode_unique);
  CHECK(peak.log_concave);  // 25 > 10, vacuous edges handled

  SequenceVerdict plateau = sequence_verdict(poly_of({0, 0, 1, 2, 2, 1}));
  CHECK(plateau.unimodal);
  CHECK(plateau.mode_index == 3);
  CHECK_FALSE(plateau.mode_unique);
  CHECK(plateau.log_concave);  // 4 > 1*2 and 4 > 2*1: strict throughout

  SequenceVerdict flat = sequence_verdict(poly_of({0, 0, 1, 2, 2, 2, 1}));
  CHECK(flat.unimodal);
  CHECK(flat.mode_index == 3);
  CHECK_FALSE(flat.mode_unique);
  CHECK_FALSE(flat.log_concave);  // middle term: 4 > 2*2 fails strictly

  SequenceVerdict valley = sequence_verdict(poly_of({0, 0, 1, 3, 1, 6, 5, 1}));
  CHECK_FALSE(valley.unimodal);
  CHECK_FALSE(valley.mode_index.has_value());
  CHECK_FALSE(valley.mode_unique);
  CHECK_FALSE(valley.log_concave);

  // Interior zero: stays inside the window and breaks both properties.
  SequenceVerdict gap = sequence_verdict(poly_of({0, 0, 1, 0, 1}));
  CHECK_FALSE(gap.unimodal);
  CHECK_FALSE(gap.log_concave);

  SequenceVerdict rising = sequence_verdict(poly_of({0, 0, 0, 4, 1}));
  CHECK(rising.unimodal);
  CHECK(rising.mode_index == 3);
  CHECK(rising.mode_unique);

  SequenceVerdict constant = sequence_verdict(poly_of({7}));
  CHECK(constant.unimodal);
  CHECK(constant.mode_index == 0);
  CHECK(constant.mode_unique);
  CHECK(constant.log_concave);

  CHECK_THROWS_AS(sequence_verdict(alliance::Polynomial()), std::invalid_argument);
}

TEST_CASE("known non-unimodal graphs") {
  SequenceVerdict sheaf = sequence_verdict(compute_polynomial(testutil::sheaf7()));
  CHECK_FALSE(sheaf.unimodal);
  SequenceVerdict pet = sequence_verdict(compute_polynomial(testutil::petersen()));
  CHECK_FALSE(pet.unimodal);  // window 12, 10, 30, 15, 10, 1 dips at x^6
}

TEST_CASE("log-concavity implies unimodality") {
  alliance::Rng rng(40);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<mpz_class> c(1 + rng.next_below(7));
    for (auto& x : c) x = static_cast<long>(rng.next_below(5));
    alliance::Polynomial p(std::move(c));
    if (p.is_zero()) continue;
    SequenceVerdict v = sequence_verdict(p);
    if (v.log_concave) CHECK(v.unimodal);
    CHECK(v.unimodal == v.mode_index.has_value());
  }
  for (const Graph& g : alliance::random_corpus(17, 7, 8)) {
    SequenceVerdict v = sequence_verdict(compute_polynomial(g));
    if (v.log_concave) CHECK(v.unimodal);
  }
}

TEST_CASE("smooth families stay unimodal") {
  using alliance::family_polynomial;
  using alliance::FamilyKind;
  for (int n = 2; n <= 25; ++n) {
    CHECK(sequence_verdict(family_polynomial({FamilyKind::path, n})).unimodal);
    CHECK(sequence_verdict(family_polynomial({FamilyKind::complete, n})).unimodal);
    CHECK(sequence_verdict(family_polynomial({FamilyKind::star, n})).unimodal);
    if (n >= 3) CHECK(sequence_verdict(family_polynomial({FamilyKind::cycle, n})).unimodal);
  }
  for (int p = 1; p <= 12; ++p)
    for (int q = p; q <= 12; ++q) {
      SequenceVerdict v =
          sequence_verdict(family_polynomial({FamilyKind::complete_bipartite, p, q}));
      CHECK(v.unimodal);
      CHECK(v.log_concave);
    }
}

TEST_CASE("double stars are not reliably unimodal") {
  using alliance::family_polynomial;
  using alliance::FamilyKind;
  auto verdict_of = [](int r, int t) {
    return sequence_verdict(family_polynomial({FamilyKind::double_star, r, t}));
  };

  SequenceVerdict small = verdict_of(3, 3);
  CHECK(small.unimodal);
  CHECK(small.log_concave);
  SequenceVerdict even = verdict_of(4, 4);
  CHECK(even.unimodal);
  CHECK(even.log_concave);
  SequenceVerdict mixed = verdict_of(3, 6);
  CHECK(mixed.unimodal);
  CHECK(mixed.log_concave);

  // Window (3, 5, 19, 30, 21, 7, 1): one peak, but 5^2 < 3*19.
  SequenceVerdict ridge = verdict_of(4, 5);
  CHECK(ridge.unimodal);
  CHECK_FALSE(ridge.log_concave);

  // Window (8, 2, 36, 48, 28, 8, 1): dips before the peak.
  SequenceVerdict valley = verdict_of(5, 5);
  CHECK_FALSE(valley.unimodal);
  CHECK_FALSE(valley.log_concave);

  // Window (1, 0, 15, 46, 51, 27, 8, 1): interior zero right above min support.
  SequenceVerdict gap = verdict_of(3, 7);
  CHECK_FALSE(gap.unimodal);
  CHECK_FALSE(gap.log_concave);

  // Even orders do not save it at scale: (20, 10, 102, ...) dips as well.
  CHECK_FALSE(verdict_of(6, 6).unimodal);
}

TEST_CASE("reports agree with structure on fixtures") {
  alliance::AllianceReport sheaf = build_report(testutil::sheaf7());
  CHECK(sheaf.alliance_number == 2);
  CHECK(sheaf.total_alliances == 17);
  CHECK_FALSE(sheaf.verdict.unimodal);
  CHECK(sheaf.checks.all());

  alliance::AllianceReport c4 = build_report(testutil::c4());
  CHECK(c4.alliance_number == 2);
  CHECK(c4.total_alliances == 9);
  CHECK(c4.verdict.unimodal);
  CHECK(c4.verdict.mode_index == 2);
  CHECK(c4.checks.all());

  alliance::AllianceReport e3 = build_report(testutil::e3());
  CHECK(e3.alliance_number == 1);
  CHECK(e3.polynomial == poly_of({0, 3}));
  CHECK(e3.checks.all());

  alliance::AllianceReport k5 = build_report(testutil::complete(5));
  CHECK(k5.alliance_number == 3);
  CHECK(k5.checks.all());

  alliance::AllianceReport split = build_report(testutil::two_p2());
  CHECK(split.alliance_number == 2);
  CHECK(split.checks.all());
}

TEST_CASE("checks hold across the random corpus") {
  for (const Graph& g : alliance::random_corpus(23, 8, 10)) {
    alliance::AllianceReport r = build_report(g);
    CHECK(r.checks.all());
    CHECK(r.alliance_number == alliance::min_support(r.polynomial));
    CHECK(r.total_alliances == alliance::evaluate_at_one(r.polynomial));
  }
}

TEST_CASE("report construction from a precomputed polynomial") {
  Graph g = testutil::c4();
  alliance::AllianceReport a = build_report(g, compute_polynomial(g));
  alliance::AllianceReport b = build_report(g);
  CHECK(a == b);
}

TEST_CASE("edgeless-shape assertion") {
  using alliance::check_empty_characterization;
  CHECK(check_empty_characterization(poly_of({0, 3}), testutil::e3()));
  CHECK(check_empty_characterization(compute_polynomial(testutil::p3()), testutil::p3()));
  // 3x claimed for a graph with edges: the assertion must reject it.
  CHECK_FALSE(check_empty_characterization(poly_of({0, 3}), testutil::p3()));
  // nx only matches when n equals the vertex count.
  CHECK(check_empty_characterization(poly_of({0, 4}), testutil::e3()));
}

TEST_CASE("vanishing-condition double enumeration") {
  using alliance::check_vanishing_condition;
  for (const Graph& g : alliance::random_corpus(29, 7, 8))
    CHECK(check_vanishing_condition(g, compute_polynomial(g)));
  CHECK(check_vanishing_condition(testutil::two_p2(), compute_polynomial(testutil::two_p2())));
  CHECK(check_vanishing_condition(testutil::petersen(), compute_polynomial(testutil::petersen())));
  Graph p25 = alliance::family_graph({alliance::FamilyKind::path, 25});
  CHECK_THROWS_AS(check_vanishing_condition(p25, poly_of({0, 0, 24})), alliance::limit_error);
}

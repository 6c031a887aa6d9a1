#include "alliance/sweeps.hpp"

#include <algorithm>

#include "alliance/analysis.hpp"
#include "alliance/corpus.hpp"
#include "alliance/errors.hpp"
#include "alliance/graph_io.hpp"

namespace alliance {

namespace {

// Formula-vs-oracle comparison for one family instance.
SweepInstance check_family_instance(const FamilySpec& spec) {
  SweepInstance inst;
  inst.label = to_string(spec);
  Polynomial formula = family_polynomial(spec);
  Polynomial truth = compute_polynomial_oracle(family_graph(spec));
  inst.expected = format_poly(formula);
  inst.actual = format_poly(truth);
  inst.pass = formula == truth;
  return inst;
}

std::vector<FamilySpec> family_instances(int max_n) {
  std::vector<FamilySpec> specs;
  for (int n = 1; n <= max_n; ++n) specs.push_back({FamilyKind::empty, n, 0});
  for (int n = 2; n <= max_n; ++n) specs.push_back({FamilyKind::path, n, 0});
  for (int n = 3; n <= max_n; ++n) specs.push_back({FamilyKind::cycle, n, 0});
  for (int n = 1; n <= max_n; ++n) specs.push_back({FamilyKind::complete, n, 0});
  for (int n = 1; n <= max_n; ++n)
    for (int m = n; n + m <= max_n; ++m) specs.push_back({FamilyKind::complete_bipartite, n, m});
  for (int n = 2; n <= max_n; ++n) specs.push_back({FamilyKind::star, n, 0});
  for (int r = 3; r <= max_n; ++r)
    for (int t = r; r + t <= max_n; ++t) specs.push_back({FamilyKind::double_star, r, t});
  for (int n = 4; n <= max_n; n += 2)
    for (int r = 0; r <= n / 2 - 1; ++r)
      specs.push_back({FamilyKind::complete_minus_matching, n, r});
  return specs;
}

}  // namespace

SweepOutcome sweep_families(const SweepOptions& opts) {
  SweepOutcome out;
  out.name = "families";
  for (const FamilySpec& spec : family_instances(opts.max_n))
    out.instances.push_back(check_family_instance(spec));
  return out;
}

SweepOutcome sweep_complete_bipartite(const SweepOptions& opts) {
  SweepOutcome out;
  out.name = "knm";
  for (int n = 1; n <= opts.max_n; ++n)
    for (int m = n; n + m <= opts.max_n; ++m)
      out.instances.push_back(check_family_instance({FamilyKind::complete_bipartite, n, m}));
  return out;
}

SweepOutcome sweep_double_star(const SweepOptions& opts) {
  SweepOutcome out;
  out.name = "double_star";
  for (int r = 3; r <= opts.max_n; ++r)
    for (int t = r; r + t <= opts.max_n; ++t) {
      SweepInstance inst;
      FamilySpec spec{FamilyKind::double_star, r, t};
      inst.label = to_string(spec);
      std::vector<mpz_class> formula =
          double_star_coefficients(r, t, opts.double_star_form);
      Polynomial truth = compute_polynomial_oracle(family_graph(spec));
      inst.expected = format_signed_coefficients(formula);
      inst.actual = format_poly(truth);
      std::vector<mpz_class> truth_vec{truth.coeffs().begin(), truth.coeffs().end()};
      inst.pass = formula == truth_vec;
      out.instances.push_back(inst);
    }
  return out;
}

SweepOutcome sweep_kn_minus_edges(const SweepOptions& opts) {
  SweepOutcome out;
  out.name = "kn_minus_edges";
  EnumerateOptions eopts;
  eopts.workers = opts.workers;
  // Even orders: invariance below a perfect matching, then the matching case.
  for (int n = 4; n <= std::min(opts.max_n, 12); n += 2) {
    Polynomial complete_poly = family_polynomial({FamilyKind::complete, n, 0});
    for (int r = 1; r <= n / 2 - 1; ++r) {
      SweepInstance inst;
      inst.label = "complete_minus_matching:" + std::to_string(n) + "," + std::to_string(r) +
                   " unchanged";
      Polynomial actual =
          compute_polynomial(family_graph({FamilyKind::complete_minus_matching, n, r}), eopts);
      inst.expected = format_poly(complete_poly);
      inst.actual = format_poly(actual);
      inst.pass = actual == complete_poly;
      out.instances.push_back(inst);
    }
    SweepInstance matching;
    matching.label =
        "complete_minus_matching:" + std::to_string(n) + "," + std::to_string(n / 2) +
        " differs, min support " + std::to_string(n / 2);
    Polynomial removed =
        compute_polynomial(family_graph({FamilyKind::complete_minus_matching, n, n / 2}), eopts);
    matching.expected = "min support " + std::to_string(n / 2) + ", not " + format_poly(complete_poly);
    matching.actual = format_poly(removed);
    matching.pass = removed != complete_poly && min_support(removed) == n / 2;
    out.instances.push_back(matching);
  }
  // Odd orders: already one removed edge changes the polynomial.
  for (int n = 3; n <= std::min(opts.max_n, 11); n += 2) {
    SweepInstance inst;
    inst.label = "complete_minus_matching:" + std::to_string(n) + ",1 differs";
    Polynomial complete_poly = family_polynomial({FamilyKind::complete, n, 0});
    Polynomial removed =
        compute_polynomial(family_graph({FamilyKind::complete_minus_matching, n, 1}), eopts);
    inst.expected = "anything but " + format_poly(complete_poly);
    inst.actual = format_poly(removed);
    inst.pass = removed != complete_poly;
    out.instances.push_back(inst);
  }
  if (opts.max_n >= 4) {
    SweepInstance c4;
    c4.label = "complete_minus_matching:4,2 equals cycle:4";
    Polynomial left =
        compute_polynomial(family_graph({FamilyKind::complete_minus_matching, 4, 2}), eopts);
    Polynomial right = family_polynomial({FamilyKind::cycle, 4, 0});
    c4.expected = format_poly(right);
    c4.actual = format_poly(left);
    c4.pass = left == right;
    out.instances.push_back(c4);
  }
  return out;
}

SweepOutcome sweep_coefficient_checks(const SweepOptions& opts) {
  SweepOutcome out;
  out.name = "theorem26";
  EnumerateOptions eopts;
  eopts.workers = opts.workers;
  int max_n = std::min(opts.max_n, 8);
  std::vector<Graph> corpus = random_corpus(opts.seed, max_n, opts.per_size);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i];
    SweepInstance inst;
    inst.label = "graph " + std::to_string(i) + " (n=" + std::to_string(g.n()) +
                 ", m=" + std::to_string(g.m()) + ")";
    AllianceReport report = build_report(g, eopts);
    bool vanishing = check_vanishing_condition(g, report.polynomial);
    inst.pass = report.checks.all() && vanishing;
    inst.expected = "all coefficient checks agree";
    if (inst.pass) {
      inst.actual = inst.expected;
    } else {
      std::string failed;
      if (!report.checks.a2_le_m) failed += " a2_le_m";
      if (!report.checks.a2_eq_m_iff_maxdeg_le_2) failed += " a2_eq_m_iff_maxdeg_le_2";
      if (!report.checks.an_eq_1_iff_connected) failed += " an_eq_1_iff_connected";
      if (!report.checks.a2_eq_1_iff_unique_light_edge) failed += " a2_eq_1_iff_unique_light_edge";
      if (!vanishing) failed += " vanishing_condition";
      inst.actual = "failed:" + failed + " on " + format_edge_list(g);
    }
    out.instances.push_back(inst);
  }
  return out;
}

SweepOutcome run_named_sweep(const std::string& name, const SweepOptions& opts) {
  if (name == "families") return sweep_families(opts);
  if (name == "knm") return sweep_complete_bipartite(opts);
  if (name == "double_star") return sweep_double_star(opts);
  if (name == "kn_minus_edges") return sweep_kn_minus_edges(opts);
  if (name == "theorem26") return sweep_coefficient_checks(opts);
  throw parse_error("unknown verification sweep \"" + name +
                    "\"; known: families, knm, double_star, kn_minus_edges, theorem26");
}

}  // namespace alliance

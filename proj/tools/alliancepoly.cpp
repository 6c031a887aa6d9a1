// alliancepoly: strong alliance polynomials of small graphs.
//
// compute  polynomial of a graph read from a file, stdin, or a named family
// family   closed-form polynomial of a family instance
// check    full report: polynomial, shape verdicts, coefficient checks
// verify   formula-vs-enumeration sweeps
// search   scan seeded corpora for non-unimodal polynomials
//
// Exit codes: 0 success, 1 usage error, 2 input parse error, 3 size cap or
// budget exceeded, 4 verification mismatch or failed check.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "alliance/alliance.hpp"
#include "alliance/analysis.hpp"
#include "alliance/corpus.hpp"
#include "alliance/enumerate.hpp"
#include "alliance/errors.hpp"
#include "alliance/families.hpp"
#include "alliance/graph_io.hpp"
#include "alliance/json_io.hpp"
#include "alliance/polynomial.hpp"
#include "alliance/sweeps.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitLimit = 3;
constexpr int kExitMismatch = 4;

struct Options {
  std::string command;
  std::string input;
  std::string format = "edge-list";
  std::string family;
  std::string engine = "auto";
  std::string sweep_name;
  std::string corpus = "random";
  int workers = 0;
  std::optional<int> budget_ms;
  bool allow_large = false;
  bool lenient = false;
  bool json = false;
  bool stats = false;
  bool printed_form = false;
  std::uint64_t seed = 1;
  std::optional<int> max_n;
  int count = 100;
};

std::string read_stream(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

alliance::Graph load_graph(const Options& opt) {
  if (!opt.family.empty()) return alliance::family_graph(alliance::parse_family(opt.family));
  std::string text;
  if (opt.input == "-") {
    text = read_stream(std::cin);
  } else {
    std::ifstream file(opt.input);
    if (!file) throw alliance::parse_error("cannot read \"" + opt.input + "\"");
    text = read_stream(file);
  }
  if (opt.format == "graph6") return alliance::parse_graph6(text);
  return alliance::parse_edge_list(text, !opt.lenient);
}

alliance::EnumerateOptions enumerate_options(const Options& opt) {
  alliance::EnumerateOptions eopts;
  eopts.engine =
      opt.engine == "oracle" ? alliance::Engine::oracle : alliance::Engine::connected;
  eopts.workers = opt.workers;
  if (opt.budget_ms) eopts.budget = std::chrono::milliseconds(*opt.budget_ms);
  eopts.allow_large = opt.allow_large;
  return eopts;
}

void print_stats(const alliance::EnumerationStats& stats) {
  std::fprintf(stderr, "subsets visited: %llu, alliances: %llu, elapsed: %.3fs, workers: %d\n",
               static_cast<unsigned long long>(stats.subsets_visited),
               static_cast<unsigned long long>(stats.alliances_found), stats.elapsed_seconds,
               stats.workers_used);
}

int cmd_compute(const Options& opt) {
  alliance::Graph g = load_graph(opt);
  auto result = alliance::enumerate_alliances(g, enumerate_options(opt));
  if (opt.stats) print_stats(result.stats);
  if (opt.json) {
    auto report = alliance::build_report(g, std::move(result.polynomial));
    std::cout << alliance::report_to_json(report).dump(2) << '\n';
  } else {
    std::cout << alliance::format_poly(result.polynomial) << '\n';
  }
  return 0;
}

int cmd_check(const Options& opt) {
  alliance::Graph g = load_graph(opt);
  auto result = alliance::enumerate_alliances(g, enumerate_options(opt));
  if (opt.stats) print_stats(result.stats);
  auto report = alliance::build_report(g, std::move(result.polynomial));
  if (opt.json) {
    std::cout << alliance::report_to_json(report).dump(2) << '\n';
  } else {
    std::cout << "polynomial: " << alliance::format_poly(report.polynomial) << '\n';
    std::cout << "alliance number: " << report.alliance_number << '\n';
    std::cout << "alliances: " << report.total_alliances.get_str() << '\n';
    std::cout << "unimodal: " << (report.verdict.unimodal ? "yes" : "no") << '\n';
    std::cout << "log-concave: " << (report.verdict.log_concave ? "yes" : "no") << '\n';
    if (report.verdict.mode_index)
      std::cout << "mode: " << *report.verdict.mode_index
                << (report.verdict.mode_unique ? " (unique)" : " (plateau)") << '\n';
    else
      std::cout << "mode: none\n";
    auto flag = [](bool ok) { return ok ? "ok" : "MISMATCH"; };
    std::cout << "checks:\n";
    std::cout << "  a2_le_m: " << flag(report.checks.a2_le_m) << '\n';
    std::cout << "  a2_eq_m_iff_maxdeg_le_2: " << flag(report.checks.a2_eq_m_iff_maxdeg_le_2)
              << '\n';
    std::cout << "  an_eq_1_iff_connected: " << flag(report.checks.an_eq_1_iff_connected) << '\n';
    std::cout << "  a2_eq_1_iff_unique_light_edge: "
              << flag(report.checks.a2_eq_1_iff_unique_light_edge) << '\n';
  }
  return report.checks.all() ? 0 : kExitMismatch;
}

int cmd_family(const Options& opt) {
  alliance::FamilySpec spec = alliance::parse_family(opt.family);
  alliance::Polynomial p = alliance::family_polynomial(spec);
  if (opt.json) {
    auto verdict = alliance::sequence_verdict(p);
    nlohmann::json mode;
    if (verdict.mode_index) mode = *verdict.mode_index;
    nlohmann::json out = {{"family", alliance::to_string(spec)},
                          {"order", alliance::family_order(spec)},
                          {"polynomial", alliance::poly_to_json(p)},
                          {"alliance_number", alliance::min_support(p)},
                          {"count", alliance::evaluate_at_one(p).get_str()},
                          {"unimodal", verdict.unimodal},
                          {"log_concave", verdict.log_concave},
                          {"mode", mode}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << alliance::format_poly(p) << '\n';
  }
  return 0;
}

int cmd_verify(const Options& opt) {
  alliance::SweepOptions sopts;
  sopts.max_n = opt.max_n.value_or(opt.sweep_name == "theorem26" ? 8 : 12);
  sopts.seed = opt.seed;
  sopts.per_size = opt.count;
  sopts.workers = opt.workers;
  sopts.double_star_form = opt.printed_form ? alliance::DoubleStarForm::printed
                                            : alliance::DoubleStarForm::corrected;
  alliance::SweepOutcome outcome = alliance::run_named_sweep(opt.sweep_name, sopts);
  if (opt.json) {
    nlohmann::json instances = nlohmann::json::array();
    for (const auto& inst : outcome.instances)
      instances.push_back({{"label", inst.label},
                           {"pass", inst.pass},
                           {"expected", inst.expected},
                           {"actual", inst.actual}});
    nlohmann::json out = {{"name", outcome.name},
                          {"instances", instances},
                          {"failures", outcome.failures()}};
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& inst : outcome.instances) {
      if (inst.pass) {
        std::cout << "ok   " << inst.label << '\n';
      } else {
        std::cout << "FAIL " << inst.label << '\n';
        std::cout << "     expected: " << inst.expected << '\n';
        std::cout << "     actual:   " << inst.actual << '\n';
      }
    }
    std::cout << outcome.instances.size() << " instances, " << outcome.failures()
              << " failures\n";
    for (const auto& inst : outcome.instances)
      if (!inst.pass) {
        std::cout << "first counterexample: " << inst.label << "\n  expected: " << inst.expected
                  << "\n  actual:   " << inst.actual << '\n';
        break;
      }
  }
  return outcome.all_pass() ? 0 : kExitMismatch;
}

int cmd_search(const Options& opt) {
  int max_n = opt.max_n.value_or(8);
  if (max_n > 10) throw alliance::limit_error("search is capped at 10 vertices");
  if (max_n < 1) throw std::invalid_argument("search needs max-n >= 1");

  std::vector<std::pair<std::string, alliance::Graph>> corpus;
  std::stringstream kinds(opt.corpus);
  std::string kind;
  while (std::getline(kinds, kind, ',')) {
    if (kind == "random") {
      int index = 0;
      for (const auto& g : alliance::random_corpus(opt.seed, max_n, opt.count))
        corpus.emplace_back("random " + std::to_string(index++), g);
    } else if (kind == "paths") {
      for (int n = 2; n <= max_n; ++n)
        corpus.emplace_back("path:" + std::to_string(n),
                            alliance::family_graph({alliance::FamilyKind::path, n, 0}));
    } else if (kind == "cycles") {
      for (int n = 3; n <= max_n; ++n)
        corpus.emplace_back("cycle:" + std::to_string(n),
                            alliance::family_graph({alliance::FamilyKind::cycle, n, 0}));
    } else {
      throw alliance::parse_error("unknown corpus \"" + kind +
                                  "\"; known: random, paths, cycles");
    }
  }
  if (!opt.input.empty()) {
    Options file_opt = opt;
    file_opt.family.clear();
    corpus.emplace_back("input " + opt.input, load_graph(file_opt));
  }

  alliance::EnumerateOptions eopts = enumerate_options(opt);
  nlohmann::json findings = nlohmann::json::array();
  int found = 0;
  for (const auto& [label, g] : corpus) {
    alliance::Polynomial p = alliance::compute_polynomial(g, eopts);
    auto verdict = alliance::sequence_verdict(p);
    if (verdict.unimodal) continue;
    ++found;
    if (opt.json) {
      nlohmann::json edges = nlohmann::json::array();
      for (auto [u, v] : g.edges()) edges.push_back({u, v});
      findings.push_back({{"label", label},
                          {"n", g.n()},
                          {"m", g.m()},
                          {"edges", edges},
                          {"polynomial", alliance::poly_to_json(p)}});
    } else {
      std::cout << "# " << label << ": non-unimodal, " << alliance::format_poly(p) << '\n';
      std::cout << alliance::format_edge_list(g);
      std::cout << '\n';
    }
  }
  if (opt.json) {
    nlohmann::json out = {{"searched", corpus.size()}, {"findings", findings}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "# searched " << corpus.size() << " graphs, found " << found
              << " non-unimodal\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"strong alliance polynomial toolkit"};
  app.require_subcommand(1);

  auto add_graph_input = [&](CLI::App* sub) {
    auto* input = sub->add_option("--input,-i", opt.input, "graph file; \"-\" reads stdin");
    auto* family = sub->add_option("--family", opt.family, "family instance, e.g. cycle:5");
    input->excludes(family);
    sub->add_option("--format", opt.format, "input format")
        ->check(CLI::IsMember({"edge-list", "graph6"}))
        ->capture_default_str();
    sub->add_flag("--lenient", opt.lenient, "drop duplicate edges instead of failing");
  };
  auto add_engine = [&](CLI::App* sub) {
    sub->add_option("--engine", opt.engine, "enumeration engine")
        ->check(CLI::IsMember({"auto", "oracle", "connected"}))
        ->capture_default_str();
    sub->add_option("--workers", opt.workers, "worker threads, 0 = all")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--budget-ms", opt.budget_ms, "wall-clock enumeration budget");
    sub->add_flag("--allow-large", opt.allow_large,
                  "enumerate graphs above the no-budget size cap");
    sub->add_flag("--stats", opt.stats, "print enumeration stats to stderr");
  };

  CLI::App* compute = app.add_subcommand("compute", "polynomial of a graph");
  add_graph_input(compute);
  add_engine(compute);
  compute->add_flag("--json", opt.json, "emit the full report as JSON");

  CLI::App* family = app.add_subcommand("family", "closed-form family polynomial");
  family->add_option("--family", opt.family, "family instance, e.g. double_star:4,6")
      ->required();
  family->add_flag("--json", opt.json, "emit polynomial and shape data as JSON");

  CLI::App* check = app.add_subcommand("check", "report with coefficient checks");
  add_graph_input(check);
  add_engine(check);
  check->add_flag("--json", opt.json, "emit the full report as JSON");

  CLI::App* verify = app.add_subcommand("verify", "formula-vs-enumeration sweep");
  verify
      ->add_option("name", opt.sweep_name,
                   "one of: families, knm, double_star, kn_minus_edges, theorem26")
      ->required();
  verify->add_option("--max-n", opt.max_n, "vertex bound per instance");
  verify->add_option("--seed", opt.seed, "corpus seed (theorem26)");
  verify->add_option("--count", opt.count, "graphs per size (theorem26)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--workers", opt.workers, "worker threads, 0 = all")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--printed-form", opt.printed_form,
                   "use the uncorrected double-star formula variant");
  verify->add_flag("--json", opt.json, "emit the sweep outcome as JSON");

  CLI::App* search = app.add_subcommand("search", "hunt for non-unimodal polynomials");
  search->add_option("--max-n", opt.max_n, "largest graph size, at most 10");
  search->add_option("--count", opt.count, "random graphs per size")
      ->check(CLI::PositiveNumber);
  search->add_option("--seed", opt.seed, "corpus seed");
  search->add_option("--corpus", opt.corpus, "comma list of: random, paths, cycles")
      ->capture_default_str();
  search->add_option("--input,-i", opt.input, "extra graph file to include in the corpus");
  search->add_option("--format", opt.format, "format of --input")
      ->check(CLI::IsMember({"edge-list", "graph6"}))
      ->capture_default_str();
  search->add_option("--workers", opt.workers, "worker threads, 0 = all")
      ->check(CLI::NonNegativeNumber);
  search->add_flag("--json", opt.json, "emit findings as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (compute->parsed()) {
      opt.command = "compute";
      if (opt.input.empty() && opt.family.empty())
        throw CLI::RequiredError("--input or --family");
      return cmd_compute(opt);
    }
    if (family->parsed()) return cmd_family(opt);
    if (check->parsed()) {
      if (opt.input.empty() && opt.family.empty())
        throw CLI::RequiredError("--input or --family");
      return cmd_check(opt);
    }
    if (verify->parsed()) return cmd_verify(opt);
    if (search->parsed()) return cmd_search(opt);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const alliance::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const alliance::limit_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

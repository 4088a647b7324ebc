// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "fixtures.hpp"
#include "flat_oracle.hpp"
#include "laws.hpp"
#include "qrcomp/characterize.hpp"
#include "qrcomp/compose.hpp"
#include "qrcomp/mc_oracle.hpp"
#include "qrcomp/query_engine.hpp"
#include "qrcomp/spec_files.hpp"
#include "qrcomp/sqdl.hpp"
#include "qrcomp/synthesize.hpp"
#include "reference_tables.hpp"

using namespace qrcomp;
using namespace qrcomp::testing;

namespace {

constexpr double kExact = 1e-9;
constexpr double kSigmas = 3.0;
constexpr std::uint64_t kSeed = 42;
constexpr std::uint64_t kOracleTrials = 100000;
constexpr std::size_t kLawTriples = 200;
constexpr std::size_t kFuzzInputs = 1000000;

struct Check {
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  void near(double got, double want, double tol, const std::string& what) {
    expect(std::abs(got - want) <= tol, fmt::format("{}: got {} want {}", what, got, want));
  }
  void equal(const std::string& got, const std::string& want, const std::string& what) {
    expect(got == want, fmt::format("{}: got {} want {}", what, got, want));
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void state_rows(Check& c, const QRModel& m, std::span<const StateRow> rows, const std::string& tag) {
  c.expect(m.size() == rows.size(), fmt::format("{}: {} states, want {}", tag, m.size(), rows.size()));
  auto values = m.assignment();
  for (const auto& row : rows) {
    auto idx = m.find(std::string(row.config));
    if (!idx) {
      c.expect(false, fmt::format("{}: missing {}", tag, row.config));
      continue;
    }
    const auto& s = m.state(*idx);
    c.equal(s.quality.render_levels(), row.levels, tag + " levels " + row.config);
    c.equal(s.quality.render_outputs(), row.outputs, tag + " outputs " + row.config);
    c.near(poly_eval(s.expr, values), row.value, kExact, tag + " value " + row.config);
  }
}

Check criterion1() {
  Check c;
  struct Row {
    const char* comp;
    const char* config;
    const char* levels;
    const char* outputs;
    const char* expr;
    const char* value;
  };
  const Row rows[] = {
      {"C1", "1X", "<50,30,20>", "<40,25,10>", "r_{1,1}", "0.80"},
      {"C1", "01", "<50,30,20>", "<35,25,10>", "(1-r_{1,1}).r_{1,2}", "0.14"},
      {"C1", "Y1", "<50,30,20>", "<35,25,10>", "r_{1,2}", "0.70"},
      {"C1", "00", "<0>", "<0>", "(1-r_{1,1}).(1-r_{1,2})", "0.06"},
      {"C1", "0Y", "<0>", "<0>", "(1-r_{1,1})", "0.20"},
      {"C1", "Y0", "<0>", "<0>", "(1-r_{1,2})", "0.30"},
      {"C1", "YY", "<0>", "<0>", "1", "1.00"},
      {"C2", "1", "<40,10>", "<30,10>", "r_{2,1}", "0.95"},
      {"C2", "0", "<0>", "<0>", "(1-r_{2,1})", "0.05"},
      {"C2", "Y", "<0>", "<0>", "1", "1.00"},
      {"C3", "1X", "<50,20,10>", "<45,20,5>", "r_{3,1}", "0.90"},
      {"C3", "01", "<50,20,10>", "<40,15,5>", "(1-r_{3,1}).r_{3,2}", "0.08"},
      {"C3", "Y1", "<50,20,10>", "<40,15,5>", "r_{3,2}", "0.80"},
      {"C3", "00", "<0>", "<0>", "(1-r_{3,1}).(1-r_{3,2})", "0.02"},
      {"C3", "0Y", "<0>", "<0>", "(1-r_{3,1})", "0.10"},
      {"C3", "Y0", "<0>", "<0>", "(1-r_{3,2})", "0.20"},
      {"C3", "YY", "<0>", "<0>", "1", "1.00"},
  };
  auto t0 = std::chrono::steady_clock::now();
  std::map<std::string, QRModel> models;
  for (const char* name : {"C1", "C2", "C3"}) models.emplace(name, component_model(name));
  std::size_t total = 0;
  for (const auto& [name, m] : models) total += m.size();
  c.expect(total == 17, fmt::format("{} rows, want 17", total));
  for (const auto& row : rows) {
    const auto& m = models.at(row.comp);
    auto idx = m.find(std::string(row.config));
    if (!idx) {
      c.expect(false, fmt::format("missing {} {}", row.comp, row.config));
      continue;
    }
    const auto& s = m.state(*idx);
    std::string tag = fmt::format("{} {}", row.comp, row.config);
    c.equal(s.quality.render_levels(), row.levels, tag + " levels");
    c.equal(s.quality.render_outputs(), row.outputs, tag + " outputs");
    c.equal(render_state_expr(s.config, m.layout()), row.expr, tag + " expression");
    c.equal(fmt::format("{:.2f}", poly_eval(s.expr, m.assignment())), row.value, tag + " value");
  }
  double secs = seconds_since(t0);
  c.expect(secs < 1.0, fmt::format("took {:.3f} s", secs));
  return c;
}

Check criterion2() {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  auto m = compose_series(component_model("C3"), component_model("C2"));
  state_rows(c, m, kSeriesRows, "series");
  double secs = seconds_since(t0);
  c.expect(secs < 1.0, fmt::format("took {:.3f} s", secs));
  return c;
}

Check criterion3() {
  Check c;
  auto c1 = component_model("C1"), c2 = component_model("C2");
  state_rows(c, compose_parallel(c1, c2, ParallelPolicy::Max), kParallelMaxRows, "max");
  state_rows(c, compose_parallel(c1, c2, ParallelPolicy::Ordered), kParallelOrderedRows, "ordered");
  return c;
}

Check criterion4() {
  Check c;
  struct Case {
    const char* sys;
    const char* qrs;
    std::span<const StateRow> abstract_rows;
    std::vector<std::pair<ModeTuple, double>> reliabilities;
  };
  const Case cases[] = {
      {"upsilon_s.sys", "upsilon_s.qrs", kSeriesAbstractRows,
       {{{1, 1}, 0.855}, {{2, 1}, 0.760}, {{1, 0}, 0}, {{2, 0}, 0}, {{0, 1}, 0}, {{0, 0}, 0}}},
      {"upsilon_p.sys", "upsilon_p.qrs", kParallelAbstractRows,
       {{{1, 1}, 0.990}, {{2, 1}, 0.985}, {{0, 1}, 0.950}, {{1, 0}, 0.800}, {{2, 0}, 0.700},
        {{0, 0}, 0.000}}},
  };
  for (const auto& k : cases) {
    auto graph = load_graph(k.sys);
    auto model = build_system_model(graph, example_specs());
    auto abstract = abstract_failure_model(model);
    state_rows(c, abstract, k.abstract_rows, k.sys);
    auto spec = emit_system_qrspec(graph, example_specs(), model);
    c.expect(spec.modes.size() == 6, fmt::format("{}: {} modes", k.sys, spec.modes.size()));
    for (const auto& [tuple, r] : k.reliabilities) {
      const auto* m = spec.find(tuple);
      std::string tag = fmt::format("{} {}", k.sys, render_mode_tuple(tuple, spec.components));
      if (!m) {
        c.expect(false, tag + " missing");
        continue;
      }
      c.near(m->reliability, r, kExact, tag + " reliability");
      // The abstract state with this tuple carries the mode's quality map.
      for (const auto& s : abstract.states()) {
        if (mode_tuple(s.config, abstract.layout()) == tuple) {
          c.expect(s.quality == m->quality, tag + " quality");
        }
      }
    }
    auto report = check_conformance(spec, parse_system_spec(read_data(k.qrs)), kExact);
    c.equal(report.summary(), "PASS, 6/6 modes matched", std::string(k.sys) + " conformance");
  }
  return c;
}

Check criterion5() {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  auto graph = load_graph("upsilon_sp.sys");
  auto model = build_system_model(graph, example_specs());
  auto abstract = abstract_failure_model(model);
  double secs = seconds_since(t0);
  c.expect(model.size() == 147, fmt::format("{} states", model.size()));
  c.expect(abstract.size() == 18, fmt::format("{} abstract states", abstract.size()));
  c.expect(abstract.failure_edges().size() == 33,
           fmt::format("{} abstract failure transitions", abstract.failure_edges().size()));
  c.expect(model.failure_edges().size() == 175,
           fmt::format("{} failure edges", model.failure_edges().size()));
  c.expect(model.suspend_edges().size() == 175,
           fmt::format("{} suspend edges", model.suspend_edges().size()));
  auto flat = flatten(graph, example_specs(), ParallelPolicy::Max);
  c.expect(flat.failure_edges.size() == 175 && flat.suspend_edges.size() == 175,
           "brute-force edge counts differ from 175/175");
  auto diff = compare_with_flat(flat, model);
  c.expect(diff.empty(), "brute-force model differs: " + diff);
  c.expect(secs < 5.0, fmt::format("took {:.3f} s", secs));
  return c;
}

Check criterion6() {
  Check c;
  auto m = abstract_failure_model(system_model("upsilon_sp.sys"));
  c.expect(m.size() == 18, fmt::format("{} rows", m.size()));
  auto values = m.assignment();
  for (auto row : kCaseStudyAbstractRows) {
    for (const auto& fix : kCaseStudyCorrections) {
      if (std::string(fix.config) == row.config) row = fix;
    }
    auto idx = m.find(std::string(row.config));
    if (!idx) {
      c.expect(false, fmt::format("missing {}", row.config));
      continue;
    }
    const auto& s = m.state(*idx);
    c.equal(render_state_expr(s.config, m.layout()), row.expr, std::string(row.config) + " expression");
    c.near(poly_eval(s.expr, values), row.value, kExact, std::string(row.config) + " value");
    c.equal(s.quality.render_levels(), row.levels, std::string(row.config) + " levels");
    c.equal(s.quality.render_outputs(), row.outputs, std::string(row.config) + " outputs");
  }
  return c;
}

ResultTable run(const char* query_file, const char* sys) {
  QueryOptions opts;
  opts.base_dir = data_file("");
  opts.system_override = data_file(sys);
  return run_query(parse_query(read_data(query_file)), opts);
}

void reliability_rows(Check& c, const ResultTable& t, std::span<const ReliabilityRow> rows,
                      const std::string& tag) {
  for (const auto& row : rows) {
    const ResultRow* hit = nullptr;
    for (const auto& r : t.rows) {
      if (r.config.str() == row.config) hit = &r;
    }
    if (!hit) {
      c.expect(false, fmt::format("{}: missing {}", tag, row.config));
      continue;
    }
    c.equal(hit->quality.render_levels(), row.levels, tag + " levels " + row.config);
    c.equal(hit->quality.render_outputs(), row.outputs, tag + " outputs " + row.config);
    c.near(hit->reliability, row.reliability, kExact, tag + " reliability " + row.config);
  }
}

void probability_rows(Check& c, const ResultTable& t, std::span<const ProbabilityRow> rows,
                      const std::string& tag) {
  c.expect(t.rows.size() == rows.size(),
           fmt::format("{}: {} rows, want {}", tag, t.rows.size(), rows.size()));
  for (const auto& row : rows) {
    const ResultRow* hit = nullptr;
    for (const auto& r : t.rows) {
      if (r.config.str() == row.config) hit = &r;
    }
    if (!hit) {
      c.expect(false, fmt::format("{}: missing {}", tag, row.config));
      continue;
    }
    c.near(hit->operate_prob, row.operate_prob, kExact, tag + " probability " + row.config);
    c.expect(hit->failures == row.failures, tag + " failure count " + row.config);
  }
}

Check criterion7() {
  Check c;
  auto q1p = run("q1.sqdl", "upsilon_p.sys");
  c.expect(q1p.rows.size() == 3, fmt::format("Query1 parallel: {} rows", q1p.rows.size()));
  reliability_rows(c, q1p, kQuery1ParallelRows, "Query1 parallel");

  auto q2p = run("q2.sqdl", "upsilon_p.sys");
  probability_rows(c, q2p, kQuery2ParallelRows, "Query2 parallel");
  c.expect(q2p.max_failures == 1, "Query2 parallel: max failures");
  c.expect(q2p.inadmissible == std::vector<std::string>{"C2"}, "Query2 parallel: C2 admissible");
  auto notes = to_table(q2p).footnotes;
  c.expect(!notes.empty() && notes[0] == "max failures tolerated = 1", "Query2 parallel: footnote");

  c.expect(run("q2.sqdl", "upsilon_s.sys").rows.empty(), "Query2 series: not empty");
  auto q1s = run("q1.sqdl", "upsilon_s.sys");
  c.expect(q1s.rows.size() == 1 && q1s.rows[0].config.str() == "1X1", "Query1 series: not 1X1 alone");

  auto q2sp = run("q2.sqdl", "upsilon_sp.sys");
  probability_rows(c, q2sp, kQuery2CaseStudyRows, "Query2 case study");
  auto q1sp = run("q1.sqdl", "upsilon_sp.sys");
  reliability_rows(c, q1sp, kQuery1CaseStudyRows, "Query1 case study");
  return c;
}

Check criterion8() {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  auto report = check_algebraic_laws(kSeed, kLawTriples);
  c.expect(report.triples >= 200, fmt::format("{} triples", report.triples));
  for (const auto& f : report.failures) c.expect(false, f);
  for (const auto& f : check_series_counterexamples()) c.expect(false, f);
  double secs = seconds_since(t0);
  c.expect(secs < 30.0, fmt::format("took {:.3f} s", secs));
  return c;
}

Check criterion9() {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  std::size_t checks = 0;
  for (const char* sys : {"upsilon_p.sys", "upsilon_s.sys", "upsilon_sp.sys"}) {
    auto graph = load_graph(sys);
    auto model = build_system_model(graph, example_specs());
    for (const auto& r : cross_validate(graph, example_specs(), model, kOracleTrials, kSeed, kSigmas)) {
      checks += 2;
      c.expect(r.prob_ok, fmt::format("{} {}: probability {} vs {}", sys, r.config.str(),
                                      r.analytic_prob, r.simulated_prob.mean));
      c.expect(r.reliability_ok, fmt::format("{} {}: reliability {} vs {}", sys, r.config.str(),
                                             r.analytic_reliability, r.simulated_reliability.mean));
    }
  }
  c.expect(checks == 2 * (21 + 21 + 147), fmt::format("{} checks", checks));
  double secs = seconds_since(t0);
  c.expect(secs < 60.0, fmt::format("took {:.3f} s", secs));
  return c;
}

std::string mutate(std::string t, std::mt19937_64& rng) {
  static const std::string alphabet =
      "-{},.:>0123456789 \n\t\r#abcdeilmnopqrstuvwxyCVXY_\xef\xbb\xbf\x01\xff";
  int edits = 1 + static_cast<int>(rng() % 6);
  for (int e = 0; e < edits; ++e) {
    if (t.empty()) {
      t.push_back(alphabet[rng() % alphabet.size()]);
      continue;
    }
    std::size_t pos = rng() % t.size();
    switch (rng() % 5) {
      case 0: t.erase(pos, 1 + rng() % 12); break;
      case 1: t.insert(pos, 1, alphabet[rng() % alphabet.size()]); break;
      case 2: t[pos] = alphabet[rng() % alphabet.size()]; break;
      case 3: {
        std::size_t from = rng() % t.size();
        t.insert(pos, t.substr(from, 1 + rng() % 16));
        break;
      }
      default: t.resize(pos); break;
    }
  }
  if (rng() % 50 == 0) {
    t.clear();
    std::size_t n = rng() % 64;
    for (std::size_t i = 0; i < n; ++i) t.push_back(static_cast<char>(rng() & 0xff));
  }
  return t;
}

Check criterion10() {
  Check c;
  std::mt19937_64 rng(kSeed);
  const std::vector<std::string> sqdl = {read_data("q1.sqdl"), read_data("q2.sqdl")};
  const std::vector<std::string> qr = {read_data("spec.qr")};
  const std::vector<std::string> sys = {read_data("upsilon_sp.sys"), read_data("upsilon_p.sys"),
                                        read_data("upsilon_p_ordered.sys")};
  const std::vector<std::function<void(const std::string&)>> parsers = {
      [](const std::string& t) { parse_queries(t); },
      [](const std::string& t) { parse_component_specs(t); },
      [](const std::string& t) { parse_system_file(t); },
  };
  const std::vector<const std::vector<std::string>*> corpora = {&sqdl, &qr, &sys};
  std::size_t accepted = 0, rejected = 0, unlocated = 0, foreign = 0;
  for (std::size_t i = 0; i < kFuzzInputs; ++i) {
    std::size_t which = i % parsers.size();
    const auto& corpus = *corpora[which];
    std::string text = mutate(corpus[rng() % corpus.size()], rng);
    try {
      parsers[which](text);
      ++accepted;
    } catch (const ParseError& e) {
      ++rejected;
      if (e.where().line == 0 || e.where().column == 0) ++unlocated;
    } catch (const ValidationError& e) {
      ++rejected;
      if (!e.where() || e.where()->line == 0 || e.where()->column == 0) {
        if (unlocated++ < 5) c.expect(false, fmt::format("unlocated: {}", e.what()));
      }
    } catch (const std::exception& e) {
      if (foreign++ < 5) c.expect(false, fmt::format("unexpected exception: {}", e.what()));
    }
  }
  c.expect(unlocated == 0, fmt::format("{} rejections without a position", unlocated));
  c.expect(foreign == 0, fmt::format("{} unexpected exceptions", foreign));
  c.expect(rejected > 0 && accepted > 0, fmt::format("accepted {} rejected {}", accepted, rejected));
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Check (*run)();
  };
  const Criterion criteria[] = {
      {1, "component characterization rows", criterion1},
      {2, "series composition C3 then C2", criterion2},
      {3, "parallel composition C1 beside C2, max and ordered", criterion3},
      {4, "reverse synthesis and conformance", criterion4},
      {5, "case-study state and transition counts", criterion5},
      {6, "case-study abstracted rows", criterion6},
      {7, "query results", criterion7},
      {8, "algebraic laws on random triples", criterion8},
      {9, "Monte-Carlo cross-validation", criterion9},
      {10, "parser robustness under fuzzing", criterion10},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.problems.push_back(fmt::format("exception: {}", e.what()));
    }
    double secs = seconds_since(t0);
    bool ok = c.problems.empty();
    failed += !ok;
    fmt::print("criterion {}: {} ... {} ({:.2f} s)\n", cr.id, cr.title, ok ? "PASS" : "FAIL", secs);
    for (std::size_t i = 0; i < c.problems.size() && i < 20; ++i) {
      fmt::print("    {}\n", c.problems[i]);
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

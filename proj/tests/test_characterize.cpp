#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "flat_oracle.hpp"
#include "qrcomp/characterize.hpp"

using namespace qrcomp;
using namespace qrcomp::testing;

namespace {

struct Row {
  const char* component;
  const char* config;
  const char* levels;
  const char* outputs;
  const char* expr;
  double value;
};

const Row kRows[] = {
    {"C1", "1X", "<50,30,20>", "<40,25,10>", "r_{1,1}", 0.80},
    {"C1", "01", "<50,30,20>", "<35,25,10>", "(1-r_{1,1}).r_{1,2}", 0.14},
    {"C1", "Y1", "<50,30,20>", "<35,25,10>", "r_{1,2}", 0.70},
    {"C1", "00", "<0>", "<0>", "(1-r_{1,1}).(1-r_{1,2})", 0.06},
    {"C1", "0Y", "<0>", "<0>", "(1-r_{1,1})", 0.20},
    {"C1", "Y0", "<0>", "<0>", "(1-r_{1,2})", 0.30},
    {"C1", "YY", "<0>", "<0>", "1", 1.00},
    {"C2", "1", "<40,10>", "<30,10>", "r_{2,1}", 0.95},
    {"C2", "0", "<0>", "<0>", "(1-r_{2,1})", 0.05},
    {"C2", "Y", "<0>", "<0>", "1", 1.00},
    {"C3", "1X", "<50,20,10>", "<45,20,5>", "r_{3,1}", 0.90},
    {"C3", "01", "<50,20,10>", "<40,15,5>", "(1-r_{3,1}).r_{3,2}", 0.08},
    {"C3", "Y1", "<50,20,10>", "<40,15,5>", "r_{3,2}", 0.80},
    {"C3", "00", "<0>", "<0>", "(1-r_{3,1}).(1-r_{3,2})", 0.02},
    {"C3", "0Y", "<0>", "<0>", "(1-r_{3,1})", 0.10},
    {"C3", "Y0", "<0>", "<0>", "(1-r_{3,2})", 0.20},
    {"C3", "YY", "<0>", "<0>", "1", 1.00},
};

}  // namespace

TEST(Characterize, ExampleComponentRows) {
  for (const auto& row : kRows) {
    auto model = component_model(row.component);
    auto idx = model.find(std::string(row.config));
    ASSERT_TRUE(idx) << row.component << " " << row.config;
    const auto& s = model.state(*idx);
    EXPECT_EQ(s.quality.render_levels(), row.levels) << row.config;
    EXPECT_EQ(s.quality.render_outputs(), row.outputs) << row.config;
    EXPECT_EQ(render_state_expr(s.config, model.layout()), row.expr) << row.config;
    EXPECT_NEAR(poly_eval(s.expr, model.assignment()), row.value, 1e-12) << row.config;
  }
  EXPECT_EQ(component_model("C1").size(), 7u);
  EXPECT_EQ(component_model("C2").size(), 3u);
  EXPECT_EQ(component_model("C3").size(), 7u);
}

TEST(Characterize, InitialStateFirst) {
  EXPECT_EQ(component_model("C1").state(0).config.str(), "1X");
  EXPECT_EQ(component_model("C2").state(0).config.str(), "1");
}

TEST(Characterize, ExampleEdges) {
  auto m = component_model("C1");
  auto id = [&](const char* c) { return *m.find(std::string(c)); };
  std::vector<Edge> f = {{id("1X"), id("01")}, {id("01"), id("00")}, {id("Y1"), id("Y0")}};
  std::vector<Edge> c = {{id("1X"), id("Y1")}, {id("01"), id("0Y")}, {id("Y1"), id("YY")}};
  std::sort(f.begin(), f.end());
  std::sort(c.begin(), c.end());
  EXPECT_EQ(m.failure_edges(), f);
  EXPECT_EQ(m.suspend_edges(), c);
}

TEST(CharacterizeProperty, SegmentEnumerationMatchesBruteForce) {
  for (std::size_t d = 1; d <= 6; ++d) {
    auto segs = enumerate_segments(d);
    auto brute = brute_force_segments(d);
    EXPECT_EQ(segs.size(), (std::size_t{1} << (d + 1)) - 1) << d;
    std::set<std::string> a, b(brute.begin(), brute.end());
    for (const auto& s : segs) a.insert(Configuration(s).str());
    EXPECT_EQ(a, b) << d;
    bool seen_dead = false;
    for (const auto& s : segs) {
      bool dead = is_dead(Segment(s));
      EXPECT_FALSE(seen_dead && !dead) << "live segments come first";
      seen_dead = seen_dead || dead;
    }
  }
}

TEST(CharacterizeProperty, StructureOfRandomComponents) {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 60; ++iter) {
    std::size_t d = 1 + rng() % 5;
    RawComponentSpec raw{"K", {}, {}};
    for (std::size_t k = 0; k < d; ++k) {
      raw.reliabilities.push_back(0.05 + 0.9 * std::uniform_real_distribution<double>()(rng));
      raw.quality.push_back({{50, 40 - static_cast<double>(k)}, {10, 5}});
    }
    auto spec = validate_component_spec(raw);
    auto m = build_component_model(spec);
    ASSERT_EQ(m.size(), (std::size_t{1} << (d + 1)) - 1);
    auto vals = m.assignment();
    for (std::size_t i = 0; i < m.size(); ++i) {
      const auto& s = m.state(i);
      bool live = operating_mode(s.config.slots()).has_value();
      std::size_t out = m.successors(i).size();
      EXPECT_EQ(out, live ? 2u : 0u) << s.config.str();
      EXPECT_EQ(s.quality.empty(), !live);
      if (live) {
        EXPECT_EQ(s.quality, spec.mode_quality[*operating_mode(s.config.slots()) - 1]);
      }
      double p = poly_eval(s.expr, vals);
      EXPECT_GE(p, 0.0);
      EXPECT_LE(p, 1.0);
    }
    // With no suspensions exactly one of the failure-chain states is realized.
    double total = 0.0;
    for (const auto& s : m.states()) {
      bool any_y = false;
      for (auto x : s.config.slots()) any_y = any_y || x == ModeStatus::Suspended;
      if (!any_y) total += poly_eval(s.expr, vals);
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

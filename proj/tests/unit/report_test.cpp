#include <necklace/chains.hpp>
#include <necklace/fixtures.hpp>
#include <necklace/report.hpp>

#include <gtest/gtest.h>

using namespace necklace;

namespace {

ChainsModel model(const char* n) { return to_categorical_coalgebra(fixtures::by_name(n)); }

}  // namespace

TEST(Report, SchemaAndDeterminism) {
  ChainsModel M = model("sphere2");
  LoopHomologyConfig cfg;
  cfg.ring = CoefficientRing::integers();
  cfg.max_degree = 3;
  nlohmann::json r = loop_homology_report(M.C, cfg);
  EXPECT_EQ(r["meta"]["ring"], "Z");
  EXPECT_EQ(r["meta"]["window"]["max_degree"], 3);
  EXPECT_EQ(r["meta"]["flags"]["route"], "coch");
  EXPECT_EQ(r["results"]["2"]["free_rank"], 1);
  EXPECT_EQ(r["results"]["2"]["torsion"], nlohmann::json::array({2}));
  EXPECT_EQ(r["results"]["2"]["exact"], true);
  EXPECT_EQ(loop_homology_report(M.C, cfg).dump(), r.dump());
}

TEST(Report, CircleSplitsByWinding) {
  ChainsModel M = model("circle");
  LoopHomologyConfig cfg;
  cfg.extended = true;
  cfg.max_degree = 2;
  cfg.max_winding = 2;
  nlohmann::json r = loop_homology_report(M.C, cfg);
  ASSERT_TRUE(r.contains("windings"));
  EXPECT_EQ(r["windings"].size(), 5u);
  for (const auto& [w, res] : r["windings"].items()) {
    EXPECT_EQ(res["0"]["free_rank"], 1) << w;
    EXPECT_EQ(res["1"]["free_rank"], 1) << w;
    EXPECT_EQ(res["2"]["free_rank"], 0) << w;
  }
}

TEST(Report, TruncationMustBeAcknowledged) {
  ChainsModel M = model("circle");
  LoopHomologyConfig cfg;
  cfg.max_degree = 1;
  EXPECT_THROW(loop_homology_report(M.C, cfg), TruncationError);
  cfg.allow_truncation = true;
  nlohmann::json r = loop_homology_report(M.C, cfg);
  EXPECT_EQ(r["results"]["0"]["exact"], false);
}

TEST(Report, CapIsEnforced) {
  ChainsModel M = model("nerve_z2");
  LoopHomologyConfig cfg;
  cfg.allow_truncation = true;
  EXPECT_THROW(loop_homology_report(M.C, cfg), CapExceededError);
}

TEST(Report, CompareDetectsDifferencesAndWindowMismatch) {
  LoopHomologyConfig cfg;
  cfg.max_degree = 2;
  cfg.allow_truncation = true;
  ChainsModel a = model("sphere2"), b = model("sphere2_cone"), c = model("circle");
  EXPECT_TRUE(compare_reports(loop_homology_report(a.C, cfg), loop_homology_report(b.C, cfg)).equal);
  ReportDiff d = compare_reports(loop_homology_report(a.C, cfg), loop_homology_report(c.C, cfg));
  EXPECT_FALSE(d.equal);
  EXPECT_FALSE(d.differences.empty());
  LoopHomologyConfig other = cfg;
  other.max_degree = 3;
  EXPECT_THROW(compare_reports(loop_homology_report(a.C, cfg), loop_homology_report(a.C, other)), std::invalid_argument);
}

TEST(Report, RoutesParse) {
  EXPECT_EQ(parse_route("ch"), Route::HochschildOfCobar);
  EXPECT_EQ(route_name(parse_route("coch")), "coch");
  EXPECT_THROW(parse_route("hh"), std::invalid_argument);
}

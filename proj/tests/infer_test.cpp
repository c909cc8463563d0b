#include <gtest/gtest.h>

#include "fsr/axioms.hpp"
#include "fsr/gallery.hpp"
#include "fsr/history.hpp"
#include "fsr/infer.hpp"
#include "fsr/random_rule.hpp"

namespace fsr {
namespace {

void expect_round_trip(const CombRule& rule, int depth, const std::string& what) {
  HistoryGraph h = build_history(rule, depth);
  CombRule inferred = infer_rule(h);
  EXPECT_TRUE(validate_rule(inferred).ok()) << what;
  HistoryGraph again = build_history(inferred, depth);
  EXPECT_EQ(level_certificates(again), level_certificates(h)) << what;
  EXPECT_EQ(history_certificate(again), history_certificate(h)) << what;
}

TEST(InferRule, CycleDoublingIsRecoveredExactly) {
  CombRule r = gallery::cycdb();
  EXPECT_EQ(infer_rule(build_history(r, 3)), r);
}

TEST(InferRule, BundledRulesRoundTrip) {
  for (const std::string& name : gallery::rule_names()) expect_round_trip(gallery::rule(name), 4, name);
}

TEST(InferRule, RandomRulesRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed)
    expect_round_trip(random_rule(seed), 4, "seed " + std::to_string(seed));
}

TEST(InferRule, InferenceIsIdempotent) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CombRule once = infer_rule(build_history(random_rule(seed), 3));
    EXPECT_EQ(infer_rule(build_history(once, 3)), once) << "seed " << seed;
  }
}

TEST(InferRule, NeedsThreeLevels) {
  try {
    infer_rule(build_history(gallery::cycdb(), 1));
    FAIL() << "expected InferenceError";
  } catch (const InferenceError& e) {
    EXPECT_NE(std::string(e.what()).find("at least three levels"), std::string::npos);
  }
}

TEST(InferRule, RejectsGraphsFailingTheConditions) {
  HistoryGraph h = build_history(gallery::cycdb(), 3);
  h.vertical[2].push_back({3, 2});
  try {
    infer_rule(h);
    FAIL() << "expected InferenceError";
  } catch (const InferenceError& e) {
    EXPECT_FALSE(e.report().passes(3));
  }
}

TEST(InferRule, PlanarHistoriesGiveRulesWithTheSameGrowth) {
  // Rule data carries no rotation system, so re-expansion matches the
  // planar history in level sizes and conditions but not necessarily in
  // isomorphism type.
  HistoryGraph h = history_graph_2d(gallery::tetra(), gallery::bary(), 3);
  CombRule r = infer_rule(h);
  HistoryGraph again = build_history(r, 4);
  std::vector<std::size_t> sizes;
  for (const LabeledGraph& l : again.levels) sizes.push_back(l.vertex_count());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 4, 24, 144, 864}));
  EXPECT_TRUE(check_axioms(again).ok());
  EXPECT_EQ(level_certificates(build_history(r, 3))[1], level_certificates(h)[1]);
}

TEST(InferRule, BoundedSurfaceFailsConditionFour) {
  HistoryGraph h = history_graph_2d(gallery::tri1(), gallery::bary(), 3);
  try {
    infer_rule(h);
    FAIL() << "expected InferenceError";
  } catch (const InferenceError& e) {
    EXPECT_FALSE(e.report().passes(4));
  }
}

}  // namespace
}  // namespace fsr

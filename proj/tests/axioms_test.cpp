#include <gtest/gtest.h>

#include "fsr/axioms.hpp"
#include "fsr/gallery.hpp"
#include "fsr/random_rule.hpp"
#include "fsr/rule.hpp"

namespace fsr {
namespace {

HistoryGraph cycdb(int depth) { return build_history(gallery::cycdb(), depth); }

TEST(CheckAxioms, BundledRulesPass) {
  for (const std::string& name : gallery::rule_names()) {
    HistoryGraph h = build_history(gallery::rule(name), 4);
    AxiomReport r = check_axioms(h);
    EXPECT_TRUE(r.ok()) << name << "\n" << r.summary();
    EXPECT_TRUE(edge_preimages_vertex_free(h)) << name;
  }
}

TEST(CheckAxioms, RandomRulesPass) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    HistoryGraph h = build_history(random_rule(seed), 4);
    AxiomReport r = check_axioms(h);
    EXPECT_TRUE(r.ok()) << "seed " << seed << "\n" << r.summary();
    EXPECT_TRUE(edge_preimages_vertex_free(h)) << "seed " << seed;
  }
}

TEST(CheckAxioms, SecondOriginBreaksConditionOne) {
  HistoryGraph h = cycdb(3);
  h.levels[0].add_vertex(1, h.origin_symbol);
  AxiomReport r = check_axioms(h);
  EXPECT_FALSE(r.passes(1));
  EXPECT_EQ(r.counterexample[0]->detail, "level 0 has 2 vertices");
}

TEST(CheckAxioms, DanglingVerticalEdgeBreaksConditionTwo) {
  HistoryGraph h = cycdb(3);
  h.vertical[2].push_back({0, 99});
  AxiomReport r = check_axioms(h);
  EXPECT_FALSE(r.passes(2));
  EXPECT_EQ(r.status[4], AxiomStatus::Skipped);
}

TEST(CheckAxioms, SecondPredecessorBreaksConditionThree) {
  HistoryGraph h = cycdb(3);
  h.vertical[2].push_back({3, 2});
  AxiomReport r = check_axioms(h);
  EXPECT_TRUE(r.passes(2));
  EXPECT_FALSE(r.passes(3));
  ASSERT_TRUE(r.counterexample[2]->first);
  EXPECT_EQ(r.counterexample[2]->first->describe(), "vertex L2:3");
  EXPECT_EQ(r.status[4], AxiomStatus::Skipped);
  EXPECT_FALSE(r.ok());
}

TEST(CheckAxioms, MissingPredecessorBreaksConditionThree) {
  HistoryGraph h = cycdb(3);
  h.vertical[3].erase(h.vertical[3].begin());
  EXPECT_FALSE(check_axioms(h).passes(3));
}

TEST(CheckAxioms, UnequalStarsBreakConditionFour) {
  HistoryGraph h = cycdb(3);
  LabeledGraph& top = h.levels[3];
  VertexId extra = top.add_vertex("a");
  top.add_edge("h", extra, 0);
  h.vertical[3].push_back({extra, 0});
  AxiomReport r = check_axioms(h);
  EXPECT_FALSE(r.passes(4));
  EXPECT_NE(r.counterexample[3]->detail.find("symbol a:"), std::string::npos);
}

TEST(CheckAxioms, UnequalSubdivisionsBreakConditionFive) {
  // Child 1 of level 2 moves from parent 0 to parent 1, so level-1 vertices
  // of equal symbol get one and three children.
  HistoryGraph h = cycdb(3);
  for (VerticalEdge& e : h.vertical[2]) {
    if (e.child == 1) e.parent = 1;
  }
  AxiomReport r = check_axioms(h);
  EXPECT_TRUE(r.passes(3));
  EXPECT_FALSE(r.passes(5)) << r.summary();
}

TEST(CheckAxioms, SummaryListsEveryCondition) {
  std::string s = check_axioms(cycdb(3)).summary();
  for (int c = 1; c <= 5; ++c) EXPECT_NE(s.find("condition " + std::to_string(c) + ": pass"), std::string::npos);
}

TEST(EdgePreimages, HoldOnPlanarHistories) {
  EXPECT_TRUE(edge_preimages_vertex_free(history_graph_2d(gallery::tetra(), gallery::bary(), 4)));
  EXPECT_TRUE(edge_preimages_vertex_free(history_graph_2d(gallery::tri1(), gallery::sier(), 4)));
}

TEST(EdgePreimages, MissingPredecessorIsStructural) {
  HistoryGraph h = cycdb(3);
  h.vertical[2].erase(h.vertical[2].begin());
  EXPECT_THROW(edge_preimages_vertex_free(h), StructuralError);
}

TEST(RefineLabels, LeavesConsistentGraphsAlone) {
  HistoryGraph h = cycdb(4);
  RefinementResult r = refine_labels(h);
  EXPECT_TRUE(r.stabilized);
  EXPECT_TRUE(r.compatible);
  EXPECT_EQ(r.vertex_classes, 1u);
  EXPECT_EQ(r.edge_classes, 1u);
  EXPECT_EQ(r.graph, h);
}

TEST(RefineLabels, BoundedTriangleNeedsRefinement) {
  HistoryGraph h = history_graph_2d(gallery::tri1(), gallery::bary(), 4);
  AxiomReport raw = check_axioms(h);
  EXPECT_FALSE(raw.passes(4));
  EXPECT_TRUE(raw.passes(1) && raw.passes(2) && raw.passes(3));
  RefinementResult r = refine_labels(h);
  EXPECT_TRUE(r.stabilized);
  EXPECT_TRUE(r.compatible);
  EXPECT_GT(r.vertex_classes, 1u);
  EXPECT_TRUE(check_axioms(r.graph).ok()) << check_axioms(r.graph).summary();
  for (std::size_t n = 0; n < h.levels.size(); ++n)
    EXPECT_EQ(r.graph.levels[n].vertex_count(), h.levels[n].vertex_count());
}

}  // namespace
}  // namespace fsr

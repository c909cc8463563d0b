#include <gtest/gtest.h>

#include "fsr/graph.hpp"

namespace fsr {
namespace {

LabeledGraph path3() {
  LabeledGraph g;
  g.add_vertex(0, "a");
  g.add_vertex(1, "b");
  g.add_vertex(2, "a");
  g.add_edge(0, "x", 0, 1);
  g.add_edge(1, "y", 1, 2);
  return g;
}

TEST(LabeledGraph, KeepsIdsSorted) {
  LabeledGraph g;
  g.add_vertex(5, "a");
  g.add_vertex(2, "b");
  g.add_vertex(9, "c");
  ASSERT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.vertices()[0].id, 2);
  EXPECT_EQ(g.vertices()[2].id, 9);
  EXPECT_EQ(g.vertex_index(5), 1u);
  EXPECT_EQ(g.add_vertex("d"), 10);
}

TEST(LabeledGraph, RejectsSelfLoopsAndDuplicates) {
  LabeledGraph g = path3();
  EXPECT_THROW(g.add_edge(7, "x", 1, 1), StructuralError);
  EXPECT_THROW(g.add_edge(0, "x", 0, 2), StructuralError);
  EXPECT_THROW(g.add_vertex(1, "a"), StructuralError);
  EXPECT_THROW(g.add_edge(8, "x", 0, 42), StructuralError);
  EXPECT_THROW(g.add_vertex(-3, "a"), StructuralError);
  EXPECT_THROW(g.vertex(17), StructuralError);
}

TEST(LabeledGraph, AllowsParallelEdgesAndFreeEnds) {
  LabeledGraph g = path3();
  g.add_edge(2, "x", 0, 1);
  g.add_edge(3, "y", 2, kFree);
  g.add_edge(4, "y", kFree, kFree);
  EXPECT_EQ(g.degree(0), 2u);
  EXPECT_EQ(g.degree(1), 3u);
  EXPECT_EQ(g.degree(2), 2u);
  EXPECT_EQ(g.edge(3).free_ends(), 1);
  EXPECT_EQ(g.edge(4).free_ends(), 2);
  EXPECT_EQ(g.incident_edges(1), (std::vector<EdgeId>{0, 1, 2}));
}

TEST(OpenStar, HasOneOpenEdgePerIncidence) {
  LabeledGraph g = path3();
  g.add_edge(2, "x", 0, 1);
  StarGraph s = open_star(g, 1);
  EXPECT_EQ(s.center, 1);
  EXPECT_EQ(s.center_symbol, "b");
  ASSERT_EQ(s.graph.vertex_count(), 1u);
  ASSERT_EQ(s.graph.edge_count(), 3u);
  for (const Edge& e : s.graph.edges()) {
    EXPECT_EQ(e.free_ends(), 1);
    EXPECT_TRUE(e.touches(1));
  }
}

struct Doubled {
  LabeledGraph parent;
  LabeledGraph child;
  Predecessor pred;
};

// Parent triangle, each vertex split in two joined by an interior edge.
Doubled doubled_triangle() {
  Doubled d;
  for (int i = 0; i < 3; ++i) d.parent.add_vertex(i, "a");
  for (int i = 0; i < 3; ++i) d.parent.add_edge(i, "h", i, (i + 1) % 3);
  for (int i = 0; i < 6; ++i) {
    d.child.add_vertex(i, "a");
    d.pred[i] = i / 2;
  }
  for (int i = 0; i < 3; ++i) d.child.add_edge(i, "h", 2 * i, 2 * i + 1);
  for (int i = 0; i < 3; ++i) d.child.add_edge(3 + i, "h", 2 * i + 1, (2 * i + 2) % 6);
  return d;
}

TEST(FragmentPreimage, VertexStarKeepsInteriorAndOpenCrossings) {
  Doubled d = doubled_triangle();
  LabeledGraph f = fragment_preimage(d.parent, d.child, d.pred, FragmentTarget::vertex(1));
  EXPECT_EQ(f.vertex_count(), 2u);
  ASSERT_EQ(f.edge_count(), 3u);
  int open = 0;
  for (const Edge& e : f.edges()) open += e.free_ends();
  EXPECT_EQ(open, 2);
}

TEST(FragmentPreimage, EdgePreimageIsOpenEdges) {
  Doubled d = doubled_triangle();
  LabeledGraph f = fragment_preimage(d.parent, d.child, d.pred, FragmentTarget::edge(0));
  EXPECT_EQ(f.vertex_count(), 0u);
  ASSERT_EQ(f.edge_count(), 1u);
  EXPECT_EQ(f.edges()[0].free_ends(), 2);
}

TEST(FragmentPreimage, BatchMatchesSingleCalls) {
  Doubled d = doubled_triangle();
  PreimageFragments all = all_fragment_preimages(d.parent, d.child, d.pred);
  for (const Vertex& v : d.parent.vertices())
    EXPECT_EQ(all.by_vertex.at(v.id), fragment_preimage(d.parent, d.child, d.pred, FragmentTarget::vertex(v.id)));
  for (const Edge& e : d.parent.edges())
    EXPECT_EQ(all.by_edge.at(e.id), fragment_preimage(d.parent, d.child, d.pred, FragmentTarget::edge(e.id)));
}

TEST(FragmentPreimage, ParallelParentEdgesShareChildren) {
  LabeledGraph parent;
  parent.add_vertex(0, "a");
  parent.add_vertex(1, "a");
  parent.add_edge(0, "h", 0, 1);
  parent.add_edge(1, "h", 0, 1);
  LabeledGraph child;
  child.add_vertex(0, "a");
  child.add_vertex(1, "a");
  child.add_edge(0, "h", 0, 1);
  Predecessor pred{{0, 0}, {1, 1}};
  EXPECT_EQ(fragment_preimage(parent, child, pred, FragmentTarget::edge(0)).edge_count(), 1u);
  EXPECT_EQ(fragment_preimage(parent, child, pred, FragmentTarget::edge(1)).edge_count(), 1u);
}

}  // namespace
}  // namespace fsr

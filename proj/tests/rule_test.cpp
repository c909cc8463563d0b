#include <gtest/gtest.h>

#include <random>

#include "fsr/canon.hpp"
#include "fsr/gallery.hpp"
#include "fsr/random_rule.hpp"
#include "fsr/rule.hpp"
#include "support.hpp"

namespace fsr {
namespace {

std::vector<std::size_t> sizes(const HistoryGraph& h) {
  std::vector<std::size_t> out;
  for (const LabeledGraph& l : h.levels) out.push_back(l.vertex_count());
  return out;
}

bool mentions(const ValidationReport& r, const std::string& needle) {
  for (const std::string& v : r.violations)
    if (v.find(needle) != std::string::npos) return true;
  return false;
}

TEST(ValidateRule, GalleryRulesAreValid) {
  for (const std::string& name : gallery::rule_names()) {
    ValidationReport r = validate_rule(gallery::rule(name));
    EXPECT_TRUE(r.ok()) << name << ": " << r.summary();
  }
}

TEST(ValidateRule, MissingStubIsReported) {
  CombRule r = gallery::cycdb();
  r.vertex_rules.at("a").stubs.pop_back();
  ValidationReport report = validate_rule(r);
  ASSERT_FALSE(report.ok());
  EXPECT_TRUE(mentions(report, "stubs, EdgeRule(h) has 1 child")) << report.summary();
}

TEST(ValidateRule, EmptyInteriorIsRejected) {
  CombRule r = gallery::ident();
  r.vertex_rules.begin()->second.interior = LabeledGraph{};
  r.vertex_rules.begin()->second.stubs.clear();
  EXPECT_TRUE(mentions(validate_rule(r), "empty interior"));
}

TEST(ValidateRule, AlphabetProblems) {
  CombRule r = gallery::cycdb();
  r.alphabet.origin_symbol = "a";
  EXPECT_TRUE(mentions(validate_rule(r), "origin symbol"));
  CombRule s = gallery::cycdb();
  s.alphabet.edge_symbols.insert("k");
  EXPECT_TRUE(mentions(validate_rule(s), "edge symbol k has no edge rule"));
}

TEST(ValidateRule, SeedMustMatchSignatures) {
  CombRule r = gallery::cycdb();
  r.seed.add_vertex("a");
  EXPECT_TRUE(mentions(validate_rule(r), "seed vertex 3 (symbol a): degree 0"));
}

TEST(ValidateRule, ValidationErrorCarriesReport) {
  CombRule r = gallery::cycdb();
  r.edge_rules.clear();
  try {
    build_history(r, 2);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_FALSE(e.report().ok());
  }
}

TEST(BuildHistory, CycleDoubling) {
  HistoryGraph h = build_history(gallery::cycdb(), 5);
  EXPECT_EQ(sizes(h), (std::vector<std::size_t>{1, 3, 6, 12, 24, 48}));
  for (std::size_t n = 1; n < h.levels.size(); ++n) {
    EXPECT_EQ(h.levels[n].edge_count(), h.levels[n].vertex_count());
    for (const Vertex& v : h.levels[n].vertices()) EXPECT_EQ(h.levels[n].degree(v.id), 2u);
  }
}

TEST(BuildHistory, IdentityStaysConstant) {
  HistoryGraph h = build_history(gallery::ident(), 6);
  for (std::size_t n = 1; n < h.levels.size(); ++n) {
    EXPECT_EQ(h.levels[n].vertex_count(), 3u);
    EXPECT_EQ(canonical_form(h.levels[n]), canonical_form(h.levels[1]));
  }
}

TEST(BuildHistory, DepthMustBePositive) {
  EXPECT_THROW(build_history(gallery::cycdb(), 0), std::invalid_argument);
  EXPECT_EQ(build_history(gallery::cycdb(), 1).depth(), 1u);
}

TEST(ExpandLevel, ChildrenNumberedParentByParent) {
  CombRule r = gallery::cycdb();
  Expansion x = expand_level(r.seed, r);
  ASSERT_EQ(x.next.vertex_count(), 6u);
  for (VertexId c = 0; c < 6; ++c) EXPECT_EQ(x.pred.at(c), c / 2);
  // Interior edges come first.
  for (EdgeId e = 0; e < 3; ++e) EXPECT_EQ(x.pred.at(x.next.edge(e).a), x.pred.at(x.next.edge(e).b));
}

TEST(ExpandLevel, InvariantUnderIdPermutation) {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CombRule r = random_rule(seed);
    LabeledGraph level = build_history(r, 2).levels.back();
    LabeledGraph shuffled = testing::relabeled(level, rng);
    EXPECT_EQ(canonical_form(expand_level(level, r).next), canonical_form(expand_level(shuffled, r).next))
        << "seed " << seed;
  }
}

TEST(AssignSlots, RejectsSignatureMismatch) {
  CombRule r = gallery::cycdb();
  LabeledGraph g = r.seed;
  g.add_vertex(10, "a");
  EXPECT_THROW(assign_slots(g, r.signatures), StructuralError);
}

TEST(AssignSlots, EveryIncidentEdgeGetsOneSlot) {
  CombRule r = gallery::cycdb();
  SlotAssignment s = assign_slots(r.seed, r.signatures);
  for (const Vertex& v : r.seed.vertices()) {
    std::vector<EdgeId> got = s.slots(v.id);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, r.seed.incident_edges(v.id));
    for (int i = 0; i < 2; ++i) EXPECT_EQ(s.slot_of(v.id, s.edge_at(v.id, i)), i);
  }
}

}  // namespace
}  // namespace fsr

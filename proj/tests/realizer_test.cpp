#include <gtest/gtest.h>

#include "fsr/canon.hpp"
#include "fsr/gallery.hpp"
#include "fsr/random_rule.hpp"
#include "fsr/realizer.hpp"

namespace fsr {
namespace {

TEST(BaseComplex, CycleDoublingCounts) {
  Complex3 base = build_base_complex(gallery::cycdb());
  EXPECT_EQ(base.count(CellKind::Ball3), 1u);
  EXPECT_EQ(base.count(CellKind::BoundaryDisk), 1u);
  EXPECT_EQ(base.count(CellKind::IdealSphereRegion), 1u);
  EXPECT_EQ(base.count(CellKind::IdealBlock), 1u);
  EXPECT_NO_THROW(validate_complex(base, true));
}

TEST(BaseComplex, OneBallAndBlockPerVertexSymbol) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    CombRule r = random_rule(seed);
    Complex3 base = build_base_complex(r);
    EXPECT_EQ(base.count(CellKind::Ball3), r.alphabet.vertex_symbols.size());
    EXPECT_EQ(base.count(CellKind::IdealBlock), r.alphabet.vertex_symbols.size());
    EXPECT_EQ(base.count(CellKind::BoundaryDisk), r.alphabet.edge_symbols.size());
  }
}

TEST(SubdividedComplex, ChildBallsAndSubdisks) {
  CombRule r = gallery::cycdb();
  SubdividedComplex s = build_subdivided_complex(r);
  EXPECT_EQ(s.complex.count(CellKind::Ball3), 2u);
  EXPECT_EQ(s.complex.count(CellKind::SubDisk, "h"), 1u);
  EXPECT_EQ(s.complex.count(CellKind::InteriorDisk), 1u);
  EXPECT_EQ(s.complex.count(CellKind::IdealComplement), 1u);
  EXPECT_TRUE(check_cellular_map(s.complex, build_base_complex(r), s.phi).empty());
}

TEST(SubdividedComplex, MapSendsCellsToTheirParents) {
  CombRule r = gallery::bary_dual();
  Pair3D p = build_pair(r);
  for (const Cell3& c : p.subdivided.cells) {
    const Cell3& image = p.base.cell(p.phi.image.at(c.id));
    EXPECT_EQ(image.dimension(), c.dimension()) << to_string(c.kind);
    EXPECT_EQ(image.color(), c.color()) << to_string(c.kind);
  }
}

TEST(Pair3D, CellCountsHoldForBundledAndRandomRules) {
  for (const std::string& name : gallery::rule_names()) {
    CombRule r = gallery::rule(name);
    CellCountReport c = check_cell_counts(r, build_pair(r));
    EXPECT_TRUE(c.ok) << name << ": " << (c.violations.empty() ? "" : c.violations.front());
  }
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    CombRule r = random_rule(seed);
    EXPECT_TRUE(check_cell_counts(r, build_pair(r)).ok) << "seed " << seed;
  }
}

TEST(Pair3D, MissingSubdiskIsCounted) {
  CombRule r = gallery::cycdb();
  Pair3D p = build_pair(r);
  for (Cell3& c : p.subdivided.cells)
    if (c.kind == CellKind::SubDisk) c.kind = CellKind::IdealSphereRegion;
  CellCountReport c = check_cell_counts(r, p);
  EXPECT_FALSE(c.ok);
}

TEST(Pair3D, BrokenMapIsReported) {
  CombRule r = gallery::cycdb();
  Pair3D p = build_pair(r);
  int ball = p.subdivided.find(CellKind::Ball3, "a", 0, "a");
  ASSERT_GE(ball, 0);
  p.phi.image[ball] = p.base.find(CellKind::BoundaryDisk, "h");
  EXPECT_FALSE(check_cellular_map(p.subdivided, p.base, p.phi).empty());
  p.phi.image.erase(ball);
  EXPECT_FALSE(check_cellular_map(p.subdivided, p.base, p.phi).empty());
}

TEST(SeedComplex, DualGraphIsTheSeed) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    CombRule r = random_rule(seed);
    Complex3 s = build_seed_complex(r);
    EXPECT_NO_THROW(validate_complex(s, false));
    EXPECT_EQ(canonical_form(seed_dual_graph(s)), canonical_form(r.seed)) << "seed " << seed;
  }
}

TEST(SeedComplex, StructureMapIsCellular) {
  CombRule r = gallery::quad_dual();
  Pair3D p = build_pair(r);
  EXPECT_TRUE(check_cellular_map(p.seed_complex, p.base, p.structure).empty());
}

TEST(ValidateComplex, RejectsSelfIdentification) {
  Complex3 c = build_seed_complex(gallery::cycdb());
  c.identifications.push_back({1, 1, true});
  EXPECT_THROW(validate_complex(c, false), StructuralError);
}

TEST(HistoryFromCells, MatchesExpansion) {
  for (const std::string& name : {"CYCDB", "IDENT", "BARYDUAL"}) {
    CombRule r = gallery::rule(name);
    EXPECT_EQ(level_certificates(history_from_cells(build_pair(r), 4)), level_certificates(build_history(r, 4)))
        << name;
  }
}

TEST(VerifyRealization, BundledRules) {
  for (const std::string& name : gallery::rule_names()) {
    RealizationReport rep = verify_realization(gallery::rule(name), 4);
    EXPECT_TRUE(rep.pass) << name << "\n" << rep.summary();
    EXPECT_EQ(rep.level_certificates.size(), 5u);
    EXPECT_EQ(rep.first_failing_level, -1);
  }
}

TEST(VerifyRealization, RandomRules) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    RealizationReport rep = verify_realization(random_rule(seed), 3);
    EXPECT_TRUE(rep.pass) << "seed " << seed << "\n" << rep.summary();
  }
}

TEST(VerifyRealization, DepthBelowTwoIsRejected) {
  EXPECT_THROW(verify_realization(gallery::cycdb(), 1), std::invalid_argument);
}

TEST(VerifyRealization, SummaryNamesEachLevel) {
  std::string s = verify_realization(gallery::cycdb(), 2).summary();
  EXPECT_EQ(s, "realization depth 2: PASS\n  level 0: isomorphic\n  level 1: isomorphic\n  level 2: isomorphic\n");
}

}  // namespace
}  // namespace fsr

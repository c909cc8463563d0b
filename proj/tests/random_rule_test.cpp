#include <gtest/gtest.h>

#include <set>

#include "fsr/io.hpp"
#include "fsr/random_rule.hpp"
#include "fsr/rule.hpp"

namespace fsr {
namespace {

TEST(RandomRule, IsDeterministic) {
  EXPECT_EQ(random_rule(42), random_rule(42));
  EXPECT_EQ(render_rule(random_rule(42)), render_rule(random_rule(42)));
}

TEST(RandomRule, SeedsGiveDifferentRules) {
  std::set<std::string> docs;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) docs.insert(render_rule(random_rule(seed)));
  EXPECT_GT(docs.size(), 20u);
}

TEST(RandomRule, RespectsBounds) {
  RandomRuleBounds b;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    CombRule r = random_rule(seed, b);
    EXPECT_TRUE(validate_rule(r).ok()) << "seed " << seed;
    EXPECT_LE(r.alphabet.vertex_symbols.size(), static_cast<std::size_t>(b.max_vertex_symbols));
    EXPECT_LE(r.alphabet.edge_symbols.size(), static_cast<std::size_t>(b.max_edge_symbols));
    EXPECT_LE(r.seed.vertex_count(), static_cast<std::size_t>(b.max_seed_vertices));
    for (const auto& [v, sig] : r.signatures) EXPECT_LE(sig.size(), static_cast<std::size_t>(b.max_signature_length));
    for (const auto& [v, vr] : r.vertex_rules)
      EXPECT_LE(vr.interior.vertex_count(), static_cast<std::size_t>(b.max_children));
    for (const auto& [e, er] : r.edge_rules)
      EXPECT_LE(er.children.size(), static_cast<std::size_t>(b.max_edge_children));
  }
}

TEST(RandomRule, ExpansionsHaveNoParallelEdges) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    HistoryGraph h = build_history(random_rule(seed), 4);
    for (const LabeledGraph& level : h.levels) {
      std::set<std::pair<VertexId, VertexId>> seen;
      for (const Edge& e : level.edges())
        EXPECT_TRUE(seen.insert({std::min(e.a, e.b), std::max(e.a, e.b)}).second) << "seed " << seed;
    }
  }
}

TEST(RandomRule, RejectsNonPositiveBounds) {
  RandomRuleBounds b;
  b.max_children = 0;
  EXPECT_THROW(random_rule(1, b), GenerationError);
}

}  // namespace
}  // namespace fsr

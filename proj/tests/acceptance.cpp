// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fsr/axioms.hpp"
#include "fsr/canon.hpp"
#include "fsr/gallery.hpp"
#include "fsr/infer.hpp"
#include "fsr/io.hpp"
#include "fsr/random_rule.hpp"
#include "fsr/realizer.hpp"
#include "support.hpp"

namespace {

using namespace fsr;

constexpr int kOraclePairs = 1000;
constexpr int kRandomRules = 25;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

std::vector<CombRule> random_rules() {
  std::vector<CombRule> out;
  for (std::uint64_t s = 1; s <= kRandomRules; ++s) out.push_back(random_rule(s));
  return out;
}

std::vector<std::size_t> sizes(const HistoryGraph& h) {
  std::vector<std::size_t> out;
  for (const LabeledGraph& l : h.levels) out.push_back(l.vertex_count());
  return out;
}

std::string list(const std::vector<std::size_t>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "]";
}

std::string degrees(const LabeledGraph& g) {
  std::map<std::size_t, std::size_t> hist;
  for (const Vertex& v : g.vertices()) ++hist[g.degree(v.id)];
  std::string out;
  for (const auto& [d, k] : hist) out += (out.empty() ? "" : " ") + std::to_string(d) + "x" + std::to_string(k);
  return out;
}

Outcome isomorphism_oracle() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  int disagreements = 0;
  for (int i = 0; i < kOraclePairs; ++i) {
    auto [g, h] = testing::oracle_pair(rng, i);
    bool truth = testing::brute_force_isomorphism(g, h).has_value();
    bool by_search = are_isomorphic(g, h).has_value();
    bool by_form = canonical_form(g) == canonical_form(h);
    if (by_search != truth || by_form != truth) ++disagreements;
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  o.notes.push_back(std::to_string(kOraclePairs) + " pairs, " + std::to_string(disagreements) + " disagreements");
  return o;
}

Outcome growth_counts() {
  Outcome o;
  auto expect = [&](const std::string& what, const HistoryGraph& h, std::vector<std::size_t> want) {
    o.require(sizes(h) == want, what + " levels " + list(sizes(h)) + " expected " + list(want));
  };
  expect("CYCDB", build_history(gallery::cycdb(), 5), {1, 3, 6, 12, 24, 48});
  expect("IDENT", build_history(gallery::ident(), 5), {1, 3, 3, 3, 3, 3});
  expect("BARY/TETRA", history_graph_2d(gallery::tetra(), gallery::bary(), 3), {1, 4, 24, 144});
  expect("QUAD/TOR9", history_graph_2d(gallery::tor9(), gallery::quad(), 3), {1, 9, 36, 144});
  HistoryGraph sier = history_graph_2d(gallery::tetra(), gallery::sier(), 3);
  expect("SIER/TETRA", sier, {1, 4, 12, 36});
  // Level 1 is the tetrahedron's dual K4; regularity is asked of the subdivided levels.
  for (std::size_t n = 2; n < sier.levels.size(); ++n) {
    const LabeledGraph& g = sier.levels[n];
    bool two_regular = std::all_of(g.vertices().begin(), g.vertices().end(),
                                   [&](const Vertex& v) { return g.degree(v.id) == 2; });
    o.require(two_regular, "SIER/TETRA level " + std::to_string(n) + " not 2-regular (degrees " + degrees(g) + ")");
  }
  return o;
}

Outcome planar_conditions() {
  Outcome o;
  struct Case {
    const char* name;
    Surface2D surface;
    SubdivisionRule2D rule;
  };
  std::vector<Case> closed{{"TETRA+BARY", gallery::tetra(), gallery::bary()},
                           {"TOR9+QUAD", gallery::tor9(), gallery::quad()},
                           {"TETRA+SIER", gallery::tetra(), gallery::sier()}};
  for (const Case& c : closed) {
    HistoryGraph h = history_graph_2d(c.surface, c.rule, 4);
    AxiomReport raw = check_axioms(h);
    if (raw.ok()) {
      o.notes.push_back(std::string(c.name) + " raw");
      continue;
    }
    RefinementResult r = refine_labels(h);
    AxiomReport refined = check_axioms(r.graph);
    o.require(refined.ok(), std::string(c.name) + " fails after refinement: " + refined.summary());
    o.notes.push_back(std::string(c.name) + " refined");
  }
  HistoryGraph tri = history_graph_2d(gallery::tri1(), gallery::bary(), 4);
  AxiomReport raw = check_axioms(tri);
  o.require(!raw.passes(4), "TRI1+BARY raw labels pass condition 4");
  RefinementResult r = refine_labels(tri);
  o.require(r.stabilized && check_axioms(r.graph).ok(), "TRI1+BARY not repaired by refinement");
  o.notes.push_back("TRI1+BARY condition 4 fails raw, repaired");
  return o;
}

Outcome edge_preimages() {
  Outcome o;
  int checked = 0;
  auto check = [&](const std::string& what, const HistoryGraph& h) {
    ++checked;
    o.require(edge_preimages_vertex_free(h), what + " has a vertex in an edge preimage");
  };
  for (const std::string& name : gallery::rule_names()) check(name, build_history(gallery::rule(name), 4));
  check("TETRA+BARY", history_graph_2d(gallery::tetra(), gallery::bary(), 4));
  check("TOR9+QUAD", history_graph_2d(gallery::tor9(), gallery::quad(), 4));
  check("TETRA+SIER", history_graph_2d(gallery::tetra(), gallery::sier(), 4));
  check("TRI1+BARY", history_graph_2d(gallery::tri1(), gallery::bary(), 4));
  std::uint64_t seed = 1;
  for (const CombRule& r : random_rules()) check("seed " + std::to_string(seed++), build_history(r, 4));
  o.notes.push_back(std::to_string(checked) + " histories");
  return o;
}

Outcome realization() {
  Outcome o;
  int failures = 0;
  auto run = [&](const std::string& what, const CombRule& rule, int depth) {
    RealizationReport rep = verify_realization(rule, depth);
    CellCountReport counts = check_cell_counts(rule, build_pair(rule));
    if (!rep.pass) ++failures;
    o.require(rep.pass, what + ": " + rep.summary());
    o.require(counts.ok, what + " cell counts: " + (counts.violations.empty() ? "" : counts.violations.front()));
  };
  for (const char* name : {"CYCDB", "IDENT", "BARYDUAL"}) run(name, gallery::rule(name), 4);
  std::uint64_t seed = 1;
  for (const CombRule& r : random_rules()) run("seed " + std::to_string(seed++), r, 3);
  o.notes.push_back(std::to_string(failures) + " realization failures");
  return o;
}

Outcome round_trip() {
  Outcome o;
  auto run = [&](const std::string& what, const CombRule& rule) {
    HistoryGraph h = build_history(rule, 5);
    try {
      HistoryGraph again = build_history(infer_rule(h), 5);
      o.require(level_certificates(again) == level_certificates(h), what + " re-expands differently");
    } catch (const std::exception& e) {
      o.require(false, what + ": " + e.what());
    }
  };
  for (const std::string& name : gallery::rule_names()) run(name, gallery::rule(name));
  std::uint64_t seed = 1;
  for (const CombRule& r : random_rules()) run("seed " + std::to_string(seed++), r);
  o.notes.push_back(std::to_string(gallery::rule_names().size() + kRandomRules) + " rules at depth 5");
  return o;
}

Outcome determinism() {
  Outcome o;
  std::mt19937_64 rng(99);
  int artifacts = 0;
  auto emit_all = [](const CombRule& r) {
    HistoryGraph h = build_history(r, 3);
    Pair3D p = build_pair(r);
    return render_rule(r) + render_history(h) + export_dot(h) + stats(h).render() + render_complex(p.base) +
           render_complex(p.subdivided) + render_complex(p.seed_complex);
  };
  std::vector<CombRule> rules = random_rules();
  for (const std::string& name : gallery::rule_names()) rules.push_back(gallery::rule(name));
  for (const CombRule& r : rules) {
    ++artifacts;
    o.require(emit_all(r) == emit_all(r), "emitters differ between runs");
    CombRule shuffled = r;
    shuffled.seed = testing::relabeled(r.seed, rng);
    o.require(history_certificate(build_history(shuffled, 3)) == history_certificate(build_history(r, 3)),
              "expansion depends on seed ids");
    LabeledGraph level = build_history(r, 2).levels.back();
    o.require(canonical_form(expand_level(testing::relabeled(level, rng), r).next) ==
                  canonical_form(expand_level(level, r).next),
              "expand_level depends on level ids");
  }
  for (const std::string& s : gallery::surface_names()) {
    for (const std::string& q : gallery::rule_2d_names()) {
      if ((s == "TOR9") != (q == "QUAD" || q == "IDENTITY2D")) continue;
      ++artifacts;
      HistoryGraph a = history_graph_2d(gallery::surface(s), gallery::rule_2d(q), 3);
      HistoryGraph b = history_graph_2d(gallery::surface(s), gallery::rule_2d(q), 3);
      o.require(render_history(a) == render_history(b) && export_dot(a) == export_dot(b),
                s + "+" + q + " differs between runs");
      o.require(render_rule_2d(gallery::rule_2d(q)) == render_rule_2d(gallery::rule_2d(q)), q + " render differs");
    }
  }
  o.require(render_rule(random_rule(42)) == render_rule(random_rule(42)), "random_rule(42) differs");
  o.notes.push_back(std::to_string(artifacts) + " inputs");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "isomorphism oracle", isomorphism_oracle},
      {2, "growth counts", growth_counts},
      {3, "condition suite on planar histories", planar_conditions},
      {4, "edge preimages are vertex-free", edge_preimages},
      {5, "3D realization", realization},
      {6, "inference round trip", round_trip},
      {7, "determinism", determinism},
  };
  int failed = 0;
  auto start_all = std::chrono::steady_clock::now();
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    char line[160];
    std::snprintf(line, sizeof line, "criterion %d %-36s %s  %6.2f s", c.number, c.name, o.pass ? "PASS" : "FAIL",
                  secs);
    std::cout << line << "\n";
    for (const std::string& n : o.notes) std::cout << "    " << n << "\n";
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_all).count();
  std::printf("%zu/%zu criteria pass in %.2f s\n", criteria.size() - failed, criteria.size(), total);
  return failed == 0 ? 0 : 1;
}

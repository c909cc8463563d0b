#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "fsr/history.hpp"

namespace fsr {

/// A vertex or horizontal edge addressed by level.
struct LevelRef {
  enum class Kind { Vertex, Edge };
  Kind kind = Kind::Vertex;
  std::size_t level = 0;
  int id = 0;

  std::string describe() const;
};

struct Counterexample {
  int condition = 0;  // 1..5
  std::optional<LevelRef> first;
  std::optional<LevelRef> second;
  std::string detail;
};

enum class AxiomStatus { Pass, Fail, Skipped };

/// Outcome of checking the five defining conditions on a finite prefix.
struct AxiomReport {
  std::array<AxiomStatus, 5> status{AxiomStatus::Pass, AxiomStatus::Pass, AxiomStatus::Pass,
                                    AxiomStatus::Pass, AxiomStatus::Pass};
  std::array<std::optional<Counterexample>, 5> counterexample;

  bool ok() const;
  bool passes(int condition) const { return status[condition - 1] == AxiomStatus::Pass; }
  std::string summary() const;
};

/// Conditions: (1) level 0 is one origin vertex; (2) every vertical edge
/// joins existing vertices one level apart; (3) every vertex below the origin
/// has exactly one predecessor; (4) equal vertex symbols have isomorphic
/// horizontal open stars; (5) below the top level, equal symbols have
/// isomorphic star preimages and equal edge symbols isomorphic edge preimages.
/// Condition 5 is skipped when 2 or 3 fails.
AxiomReport check_axioms(const HistoryGraph& h);

/// True when every edge preimage in the prefix contains no vertex.
bool edge_preimages_vertex_free(const HistoryGraph& h);

struct RefinementResult {
  HistoryGraph graph;
  bool stabilized = false;
  int iterations = 0;
  std::size_t vertex_classes = 0;
  std::size_t edge_classes = 0;
  // check_axioms passes on the refined graph.
  bool compatible = false;
};

/// Coarsest stable refinement of the labels. Vertex classes split by
/// (symbol, star certificate, star-preimage certificate), edge classes by
/// (symbol, endpoint classes, edge-preimage certificate). Top-level items
/// have no preimage; they join the unique lower class agreeing on everything
/// else, or form their own class. Symbols that do not split keep their name;
/// split ones become "<symbol>.<k>".
RefinementResult refine_labels(const HistoryGraph& h);

}  // namespace fsr

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fsr/graph.hpp"

namespace fsr {

inline constexpr const char* kDefaultOriginSymbol = "O";
// Symbol given to vertical edges when a history graph is flattened.
inline constexpr const char* kVerticalSymbol = "^";

struct VerticalEdge {
  VertexId child = 0;   // vertex of level n
  VertexId parent = 0;  // vertex of level n - 1

  friend bool operator==(const VerticalEdge&, const VerticalEdge&) = default;
};

/// Origin, leveled horizontal graphs and the vertical (predecessor) edges.
/// Level 0 holds the origin alone. vertical[n] lists the edges from level n
/// up to level n - 1; vertical[0] is empty. A vertex is identified by its
/// (level, id) pair, so levels never share vertices.
struct HistoryGraph {
  Symbol origin_symbol = kDefaultOriginSymbol;
  std::vector<LabeledGraph> levels;
  std::vector<std::vector<VerticalEdge>> vertical;

  static HistoryGraph with_origin(Symbol origin_symbol = kDefaultOriginSymbol);

  // Number of levels below the origin.
  std::size_t depth() const { return levels.empty() ? 0 : levels.size() - 1; }

  // Appends a level whose vertices are attached to level depth() by `pred`.
  void push_level(LabeledGraph level, const Predecessor& pred);

  // Predecessor of each vertex in `level` (first vertical edge wins).
  Predecessor predecessor(std::size_t level) const;

  friend bool operator==(const HistoryGraph&, const HistoryGraph&) = default;
};

/// Whole history graph as one labeled graph. Vertex symbols become
/// "<level>:<symbol>", vertical edges carry kVerticalSymbol. Two history
/// graphs flatten to isomorphic graphs exactly when some level-preserving
/// isomorphism of their levels commutes with the predecessor maps.
LabeledGraph flatten(const HistoryGraph& h);

/// Vertex id offset of each level inside flatten(h).
std::vector<VertexId> flatten_offsets(const HistoryGraph& h);

std::string history_certificate(const HistoryGraph& h);

/// Per-level certificates, index 0 = origin level.
std::vector<std::string> level_certificates(const HistoryGraph& h);

}  // namespace fsr

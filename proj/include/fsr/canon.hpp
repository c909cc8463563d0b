#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fsr/graph.hpp"

namespace fsr {

/// Certificate returned for the graph with no vertices and no edges.
inline constexpr std::string_view kEmptyCertificate = "fsr-cert/1:empty";

struct CanonicalLabeling {
  // Equal for two graphs exactly when they are labeled-isomorphic.
  std::string certificate;
  // order[p] is the vertex placed at canonical position p.
  std::vector<VertexId> order;

  std::map<VertexId, int> positions() const;
};

/// Canonical labeling by equitable refinement plus individualization search,
/// pruned with discovered automorphisms. `extra_colors`, when given, is
/// indexed like g.vertices() and becomes part of each vertex's colour.
CanonicalLabeling canonical_labeling(const LabeledGraph& g, std::span<const int> extra_colors = {});

std::string canonical_form(const LabeledGraph& g);

struct LabeledIsomorphism {
  std::map<VertexId, VertexId> vertices;
  std::map<EdgeId, EdgeId> edges;
};

/// Lexicographically least witness under sorted ids, or nullopt.
std::optional<LabeledIsomorphism> are_isomorphic(const LabeledGraph& g, const LabeledGraph& h);

/// Some witness, read off the two canonical labelings. Much cheaper than
/// are_isomorphic on large graphs; deterministic but not lexicographically least.
std::optional<LabeledIsomorphism> canonical_isomorphism(const LabeledGraph& g,
                                                        const LabeledGraph& h);

/// Extends a vertex bijection to the lexicographically least edge bijection.
std::optional<LabeledIsomorphism> complete_edge_map(const LabeledGraph& g, const LabeledGraph& h,
                                                    const std::map<VertexId, VertexId>& vertices);

/// Checks that `iso` is a label- and incidence-preserving bijection g -> h.
bool is_isomorphism(const LabeledGraph& g, const LabeledGraph& h, const LabeledIsomorphism& iso);

}  // namespace fsr

#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsr {

using Symbol = std::string;
using VertexId = int;
using EdgeId = int;

/// Sentinel for an edge end that is not attached to any vertex (an open end).
inline constexpr VertexId kFree = -1;

/// Raised when input data violates a structural invariant. Indicates a caller bug
/// or malformed input rather than a negative answer.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Vertex {
  VertexId id = 0;
  Symbol symbol;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  EdgeId id = 0;
  Symbol symbol;
  VertexId a = kFree;
  VertexId b = kFree;

  int free_ends() const { return (a == kFree ? 1 : 0) + (b == kFree ? 1 : 0); }
  bool touches(VertexId v) const { return v != kFree && (a == v || b == v); }
  VertexId other(VertexId v) const { return a == v ? b : a; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite multigraph with vertex and edge labels. Edges may have one or both
/// ends FREE, so open stars and unions of open edges are ordinary values.
/// Parallel edges are allowed, self-loops are not. Vertices and edges are
/// kept sorted by id.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  void add_vertex(VertexId id, Symbol symbol);
  void add_edge(EdgeId id, Symbol symbol, VertexId a, VertexId b);

  // Appends with the next unused id.
  VertexId add_vertex(Symbol symbol);
  EdgeId add_edge(Symbol symbol, VertexId a, VertexId b);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return vertices_.empty() && edges_.empty(); }

  bool has_vertex(VertexId id) const;
  bool has_edge(EdgeId id) const;
  const Vertex& vertex(VertexId id) const;
  const Edge& edge(EdgeId id) const;
  // Position of the vertex in vertices(); throws if absent.
  std::size_t vertex_index(VertexId id) const;

  std::size_t degree(VertexId id) const;
  std::vector<EdgeId> incident_edges(VertexId id) const;

  void set_vertex_symbol(VertexId id, Symbol symbol);
  void set_edge_symbol(EdgeId id, Symbol symbol);

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// One vertex plus one open edge per incident edge-end.
struct StarGraph {
  LabeledGraph graph;
  VertexId center = 0;
  Symbol center_symbol;
};

StarGraph open_star(const LabeledGraph& g, VertexId v);

using Predecessor = std::map<VertexId, VertexId>;

struct FragmentTarget {
  enum class Kind { Vertex, Edge };
  Kind kind = Kind::Vertex;
  int id = 0;

  static FragmentTarget vertex(VertexId v) { return {Kind::Vertex, v}; }
  static FragmentTarget edge(EdgeId e) { return {Kind::Edge, e}; }
};

/// Preimage under the predecessor map of a parent vertex's open star or of a
/// parent edge. Edge targets yield a union of open edges (both ends FREE).
/// When the parent has parallel edges between u and w, each of them receives
/// every child edge running between the fibres over u and w.
LabeledGraph fragment_preimage(const LabeledGraph& parent, const LabeledGraph& child,
                               const Predecessor& pred, FragmentTarget target);

/// All vertex and edge preimages at once; equivalent to calling
/// fragment_preimage for every parent vertex and edge.
struct PreimageFragments {
  std::map<VertexId, LabeledGraph> by_vertex;
  std::map<EdgeId, LabeledGraph> by_edge;
};

PreimageFragments all_fragment_preimages(const LabeledGraph& parent, const LabeledGraph& child,
                                         const Predecessor& pred);

}  // namespace fsr

#include "fsr/graph.hpp"

#include <algorithm>
#include <utility>

namespace fsr {

namespace {

template <typename T>
auto find_by_id(const std::vector<T>& items, int id) {
  return std::lower_bound(items.begin(), items.end(), id,
                          [](const T& item, int key) { return item.id < key; });
}

template <typename T>
auto find_by_id(std::vector<T>& items, int id) {
  return std::lower_bound(items.begin(), items.end(), id,
                          [](const T& item, int key) { return item.id < key; });
}

std::string end_name(VertexId v) { return v == kFree ? std::string("*") : std::to_string(v); }

}  // namespace

void LabeledGraph::add_vertex(VertexId id, Symbol symbol) {
  if (id < 0) throw StructuralError("vertex id must be non-negative: " + std::to_string(id));
  auto it = find_by_id(vertices_, id);
  if (it != vertices_.end() && it->id == id)
    throw StructuralError("duplicate vertex id " + std::to_string(id));
  vertices_.insert(it, Vertex{id, std::move(symbol)});
}

void LabeledGraph::add_edge(EdgeId id, Symbol symbol, VertexId a, VertexId b) {
  if (id < 0) throw StructuralError("edge id must be non-negative: " + std::to_string(id));
  if (a != kFree && a == b)
    throw StructuralError("edge " + std::to_string(id) + " is a self-loop at vertex " +
                          std::to_string(a));
  for (VertexId end : {a, b}) {
    if (end != kFree && !has_vertex(end))
      throw StructuralError("edge " + std::to_string(id) + " references unknown vertex " +
                            std::to_string(end));
  }
  auto it = find_by_id(edges_, id);
  if (it != edges_.end() && it->id == id)
    throw StructuralError("duplicate edge id " + std::to_string(id));
  edges_.insert(it, Edge{id, std::move(symbol), a, b});
}

VertexId LabeledGraph::add_vertex(Symbol symbol) {
  VertexId id = vertices_.empty() ? 0 : vertices_.back().id + 1;
  vertices_.push_back(Vertex{id, std::move(symbol)});
  return id;
}

EdgeId LabeledGraph::add_edge(Symbol symbol, VertexId a, VertexId b) {
  EdgeId id = edges_.empty() ? 0 : edges_.back().id + 1;
  add_edge(id, std::move(symbol), a, b);
  return id;
}

bool LabeledGraph::has_vertex(VertexId id) const {
  auto it = find_by_id(vertices_, id);
  return it != vertices_.end() && it->id == id;
}

bool LabeledGraph::has_edge(EdgeId id) const {
  auto it = find_by_id(edges_, id);
  return it != edges_.end() && it->id == id;
}

const Vertex& LabeledGraph::vertex(VertexId id) const { return vertices_[vertex_index(id)]; }

const Edge& LabeledGraph::edge(EdgeId id) const {
  auto it = find_by_id(edges_, id);
  if (it == edges_.end() || it->id != id)
    throw StructuralError("unknown edge id " + std::to_string(id));
  return *it;
}

std::size_t LabeledGraph::vertex_index(VertexId id) const {
  auto it = find_by_id(vertices_, id);
  if (it == vertices_.end() || it->id != id)
    throw StructuralError("unknown vertex id " + std::to_string(id));
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t LabeledGraph::degree(VertexId id) const {
  vertex_index(id);
  std::size_t d = 0;
  for (const Edge& e : edges_) d += (e.a == id ? 1 : 0) + (e.b == id ? 1 : 0);
  return d;
}

std::vector<EdgeId> LabeledGraph::incident_edges(VertexId id) const {
  vertex_index(id);
  std::vector<EdgeId> out;
  for (const Edge& e : edges_)
    if (e.touches(id)) out.push_back(e.id);
  return out;
}

void LabeledGraph::set_vertex_symbol(VertexId id, Symbol symbol) {
  vertices_[vertex_index(id)].symbol = std::move(symbol);
}

void LabeledGraph::set_edge_symbol(EdgeId id, Symbol symbol) {
  auto it = find_by_id(edges_, id);
  if (it == edges_.end() || it->id != id)
    throw StructuralError("unknown edge id " + std::to_string(id));
  it->symbol = std::move(symbol);
}

StarGraph open_star(const LabeledGraph& g, VertexId v) {
  const Vertex& center = g.vertex(v);
  StarGraph star;
  star.center = v;
  star.center_symbol = center.symbol;
  star.graph.add_vertex(v, center.symbol);
  for (const Edge& e : g.edges())
    if (e.touches(v)) star.graph.add_edge(e.id, e.symbol, v, kFree);
  return star;
}

namespace {

using VertexPair = std::pair<VertexId, VertexId>;

VertexPair ordered(VertexId x, VertexId y) { return x < y ? VertexPair{x, y} : VertexPair{y, x}; }

VertexId image(const Predecessor& pred, VertexId child) {
  auto it = pred.find(child);
  if (it == pred.end())
    throw StructuralError("predecessor is not defined for child vertex " + std::to_string(child));
  return it->second;
}

}  // namespace

PreimageFragments all_fragment_preimages(const LabeledGraph& parent, const LabeledGraph& child,
                                         const Predecessor& pred) {
  std::map<VertexPair, std::vector<EdgeId>> parent_edges_between;
  for (const Edge& e : parent.edges())
    if (e.free_ends() == 0) parent_edges_between[ordered(e.a, e.b)].push_back(e.id);

  PreimageFragments out;
  for (const Vertex& u : parent.vertices()) out.by_vertex[u.id];
  for (const Edge& e : parent.edges()) out.by_edge[e.id];

  for (const Vertex& c : child.vertices()) {
    VertexId u = image(pred, c.id);
    auto it = out.by_vertex.find(u);
    if (it == out.by_vertex.end())
      throw StructuralError("child vertex " + std::to_string(c.id) +
                            " maps to unknown parent vertex " + std::to_string(u));
    it->second.add_vertex(c.id, c.symbol);
  }

  for (const Edge& e : child.edges()) {
    VertexId pa = e.a == kFree ? kFree : image(pred, e.a);
    VertexId pb = e.b == kFree ? kFree : image(pred, e.b);
    if (pa != kFree && pb != kFree && pa == pb) {
      out.by_vertex[pa].add_edge(e.id, e.symbol, e.a, e.b);
      continue;
    }
    if (pa != kFree && pb != kFree) {
      auto between = parent_edges_between.find(ordered(pa, pb));
      if (between == parent_edges_between.end())
        throw StructuralError("child edge " + std::to_string(e.id) + " (" + end_name(e.a) + "-" +
                              end_name(e.b) + ") maps onto non-adjacent parent vertices " +
                              std::to_string(pa) + " and " + std::to_string(pb));
      for (EdgeId pe : between->second) out.by_edge[pe].add_edge(e.id, e.symbol, kFree, kFree);
    }
    // The end lying over a vertex keeps its endpoint; the far end is opened.
    if (pa != kFree) out.by_vertex[pa].add_edge(e.id, e.symbol, e.a, kFree);
    if (pb != kFree) out.by_vertex[pb].add_edge(e.id, e.symbol, e.b, kFree);
  }
  return out;
}

LabeledGraph fragment_preimage(const LabeledGraph& parent, const LabeledGraph& child,
                               const Predecessor& pred, FragmentTarget target) {
  if (target.kind == FragmentTarget::Kind::Vertex && !parent.has_vertex(target.id))
    throw StructuralError("unknown parent vertex " + std::to_string(target.id));
  if (target.kind == FragmentTarget::Kind::Edge && !parent.has_edge(target.id))
    throw StructuralError("unknown parent edge " + std::to_string(target.id));
  PreimageFragments all = all_fragment_preimages(parent, child, pred);
  return target.kind == FragmentTarget::Kind::Vertex ? std::move(all.by_vertex[target.id])
                                                     : std::move(all.by_edge[target.id]);
}

}  // namespace fsr

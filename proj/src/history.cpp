#include "fsr/history.hpp"

#include "fsr/canon.hpp"

namespace fsr {

HistoryGraph HistoryGraph::with_origin(Symbol origin_symbol) {
  HistoryGraph h;
  h.origin_symbol = std::move(origin_symbol);
  LabeledGraph root;
  root.add_vertex(0, h.origin_symbol);
  h.levels.push_back(std::move(root));
  h.vertical.emplace_back();
  return h;
}

void HistoryGraph::push_level(LabeledGraph level, const Predecessor& pred) {
  std::vector<VerticalEdge> up;
  up.reserve(level.vertex_count());
  for (const Vertex& v : level.vertices()) {
    auto it = pred.find(v.id);
    if (it == pred.end())
      throw StructuralError("no predecessor for vertex " + std::to_string(v.id) + " of level " +
                            std::to_string(levels.size()));
    up.push_back({v.id, it->second});
  }
  levels.push_back(std::move(level));
  vertical.push_back(std::move(up));
}

Predecessor HistoryGraph::predecessor(std::size_t level) const {
  Predecessor pred;
  if (level < vertical.size())
    for (const VerticalEdge& e : vertical[level]) pred.emplace(e.child, e.parent);
  return pred;
}

std::vector<VertexId> flatten_offsets(const HistoryGraph& h) {
  std::vector<VertexId> offsets;
  VertexId next = 0;
  for (const LabeledGraph& level : h.levels) {
    offsets.push_back(next);
    next += level.vertices().empty() ? 0 : level.vertices().back().id + 1;
  }
  return offsets;
}

LabeledGraph flatten(const HistoryGraph& h) {
  LabeledGraph out;
  std::vector<VertexId> offsets = flatten_offsets(h);
  for (std::size_t n = 0; n < h.levels.size(); ++n)
    for (const Vertex& v : h.levels[n].vertices())
      out.add_vertex(offsets[n] + v.id, std::to_string(n) + ":" + v.symbol);
  EdgeId next = 0;
  for (std::size_t n = 0; n < h.levels.size(); ++n) {
    for (const Edge& e : h.levels[n].edges()) {
      VertexId a = e.a == kFree ? kFree : offsets[n] + e.a;
      VertexId b = e.b == kFree ? kFree : offsets[n] + e.b;
      out.add_edge(next++, e.symbol, a, b);
    }
    if (n >= 1 && n < h.vertical.size())
      for (const VerticalEdge& v : h.vertical[n])
        out.add_edge(next++, kVerticalSymbol, offsets[n] + v.child, offsets[n - 1] + v.parent);
  }
  return out;
}

std::string history_certificate(const HistoryGraph& h) { return canonical_form(flatten(h)); }

std::vector<std::string> level_certificates(const HistoryGraph& h) {
  std::vector<std::string> out;
  for (const LabeledGraph& level : h.levels) out.push_back(canonical_form(level));
  return out;
}

}  // namespace fsr

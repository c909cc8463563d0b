#include "fsr/infer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace fsr {

namespace {

std::string vertex_name(std::size_t level, VertexId v) {
  return "L" + std::to_string(level) + ":" + std::to_string(v);
}

// Crossing edges of the child level grouped under the parent edge they
// subdivide, each group sorted by (symbol, id).
std::map<EdgeId, std::vector<const Edge*>> crossing_groups(const LabeledGraph& parent,
                                                           const LabeledGraph& child,
                                                           const Predecessor& pred, std::size_t level) {
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> between;
  for (const Edge& e : parent.edges()) between[std::minmax(e.a, e.b)].push_back(e.id);

  std::map<EdgeId, std::vector<const Edge*>> groups;
  for (const Edge& e : parent.edges()) groups[e.id];
  for (const Edge& e : child.edges()) {
    VertexId pa = pred.at(e.a), pb = pred.at(e.b);
    if (pa == pb) continue;
    auto it = between.find(std::minmax(pa, pb));
    if (it == between.end())
      throw InferenceError("child edge " + std::to_string(e.id) + " joins non-adjacent parents " +
                           vertex_name(level, pa) + " and " + vertex_name(level, pb));
    if (it->second.size() != 1)
      throw InferenceError("parallel edges between " + vertex_name(level, pa) + " and " +
                           vertex_name(level, pb) + " make the edge lineage ambiguous");
    groups[it->second.front()].push_back(&e);
  }
  for (auto& [id, es] : groups)
    std::sort(es.begin(), es.end(), [](const Edge* x, const Edge* y) {
      return std::tie(x->symbol, x->id) < std::tie(y->symbol, y->id);
    });
  return groups;
}

}  // namespace

CombRule infer_rule(const HistoryGraph& h) {
  AxiomReport report = check_axioms(h);
  if (!report.ok()) throw InferenceError("history graph fails the axioms:\n" + report.summary(), report);
  if (h.levels.size() < 3)
    throw InferenceError("need at least three levels (origin, seed and one subdivision)", report);

  const std::size_t top = h.depth();
  CombRule rule;
  rule.alphabet.origin_symbol = h.origin_symbol;
  rule.seed = h.levels[1];

  // Signatures from the first occurrence of each symbol.
  for (std::size_t n = 1; n <= top; ++n) {
    const LabeledGraph& level = h.levels[n];
    for (const Edge& e : level.edges()) rule.alphabet.edge_symbols.insert(e.symbol);
    for (const Vertex& v : level.vertices()) {
      rule.alphabet.vertex_symbols.insert(v.symbol);
      if (rule.signatures.count(v.symbol)) continue;
      StarSignature sig;
      for (const Edge& e : level.edges())
        if (e.touches(v.id)) sig.push_back(e.symbol);
      std::sort(sig.begin(), sig.end());
      rule.signatures[v.symbol] = std::move(sig);
    }
  }

  for (std::size_t n = 1; n < top; ++n) {
    const LabeledGraph& parent = h.levels[n];
    const LabeledGraph& child = h.levels[n + 1];
    bool needed = false;
    for (const Vertex& v : parent.vertices()) needed |= !rule.vertex_rules.count(v.symbol);
    for (const Edge& e : parent.edges()) needed |= !rule.edge_rules.count(e.symbol);
    if (!needed) continue;

    Predecessor pred = h.predecessor(n + 1);
    auto groups = crossing_groups(parent, child, pred, n);
    SlotAssignment slots = assign_slots(parent, rule.signatures);

    for (const Edge& e : parent.edges()) {
      if (rule.edge_rules.count(e.symbol)) continue;
      EdgeRule er{e.symbol, {}};
      for (const Edge* c : groups.at(e.id)) er.children.push_back(c->symbol);
      rule.edge_rules[e.symbol] = std::move(er);
    }

    std::map<VertexId, std::vector<VertexId>> fibre;
    for (const auto& [c, p] : pred) fibre[p].push_back(c);

    for (const Vertex& u : parent.vertices()) {
      if (rule.vertex_rules.count(u.symbol)) continue;
      VertexRule vr;
      vr.parent = u.symbol;
      std::map<VertexId, VertexId> local;
      for (VertexId c : fibre[u.id]) {
        local[c] = static_cast<VertexId>(local.size());
        vr.interior.add_vertex(local[c], child.vertex(c).symbol);
      }
      for (const Edge& e : child.edges())
        if (local.count(e.a) && local.count(e.b)) vr.interior.add_edge(e.symbol, local[e.a], local[e.b]);
      const std::vector<EdgeId>& around = slots.slots(u.id);
      for (int slot = 0; slot < static_cast<int>(around.size()); ++slot) {
        const auto& group = groups.at(around[slot]);
        for (int j = 0; j < static_cast<int>(group.size()); ++j) {
          const Edge* c = group[j];
          VertexId mine = pred.at(c->a) == u.id ? c->a : c->b;
          vr.stubs.push_back({local.at(mine), slot, j});
        }
      }
      rule.vertex_rules[u.symbol] = std::move(vr);
    }
  }

  for (const Symbol& v : rule.alphabet.vertex_symbols)
    if (!rule.vertex_rules.count(v))
      throw InferenceError("symbol " + v + " never occurs below the top level; its subdivision is unknown");
  for (const Symbol& e : rule.alphabet.edge_symbols)
    if (!rule.edge_rules.count(e))
      throw InferenceError("edge symbol " + e +
                           " never occurs below the top level; its subdivision is unknown");

  ValidationReport valid = validate_rule(rule);
  if (!valid.ok()) throw InferenceError("inferred rule is invalid:\n" + valid.summary());
  return rule;
}

}  // namespace fsr

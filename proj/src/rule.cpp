#include "fsr/rule.hpp"

#include <algorithm>
#include <tuple>

#include "fsr/canon.hpp"

namespace fsr {

namespace {

std::string one_based(int i) { return std::to_string(i + 1); }

std::vector<Symbol> sorted_copy(std::vector<Symbol> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

std::string join(const std::vector<Symbol>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i];
  return out + "]";
}

std::vector<Symbol> incident_symbols(const LabeledGraph& g, VertexId v) {
  std::vector<Symbol> out;
  for (const Edge& e : g.edges())
    if (e.touches(v)) out.push_back(e.symbol);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string ValidationReport::summary() const {
  if (ok()) return "pass";
  std::string out;
  for (const std::string& v : violations) out += v + "\n";
  return out;
}

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error("invalid rule:\n" + report.summary()), report_(std::move(report)) {}

ValidationReport validate_rule(const CombRule& rule) {
  ValidationReport report;
  auto fail = [&](std::string msg) { report.violations.push_back(std::move(msg)); };
  const LabelAlphabet& abc = rule.alphabet;
  auto is_vertex_symbol = [&](const Symbol& s) { return abc.vertex_symbols.count(s) > 0; };
  auto is_edge_symbol = [&](const Symbol& s) { return abc.edge_symbols.count(s) > 0; };

  if (abc.vertex_symbols.empty()) fail("alphabet has no vertex symbols");
  if (abc.edge_symbols.empty()) fail("alphabet has no edge symbols");
  if (is_vertex_symbol(abc.origin_symbol) || is_edge_symbol(abc.origin_symbol))
    fail("origin symbol " + abc.origin_symbol + " is also a tile or edge symbol");
  for (const Symbol& s : abc.vertex_symbols)
    if (is_edge_symbol(s)) fail("symbol " + s + " is both a vertex and an edge symbol");

  for (const Symbol& v : abc.vertex_symbols) {
    if (!rule.signatures.count(v)) fail("vertex symbol " + v + " has no signature");
    if (!rule.vertex_rules.count(v)) fail("vertex symbol " + v + " has no vertex rule");
  }
  for (const Symbol& e : abc.edge_symbols)
    if (!rule.edge_rules.count(e)) fail("edge symbol " + e + " has no edge rule");

  for (const auto& [v, sig] : rule.signatures) {
    if (!is_vertex_symbol(v)) fail("signature for symbol " + v + " not in the alphabet");
    for (const Symbol& e : sig)
      if (!is_edge_symbol(e)) fail("signature of " + v + " uses symbol " + e + " not in the alphabet");
  }
  for (const auto& [e, er] : rule.edge_rules) {
    if (!is_edge_symbol(e)) fail("edge rule for symbol " + e + " not in the alphabet");
    if (er.parent != e) fail("edge rule keyed " + e + " names parent " + er.parent);
    for (const Symbol& c : er.children)
      if (!is_edge_symbol(c)) fail("edge rule " + e + " has child symbol " + c + " not in the alphabet");
  }
  if (!report.ok()) return report;

  for (const auto& [v, vr] : rule.vertex_rules) {
    if (!is_vertex_symbol(v)) {
      fail("vertex rule for symbol " + v + " not in the alphabet");
      continue;
    }
    if (vr.parent != v) fail("vertex rule keyed " + v + " names parent " + vr.parent);
    const StarSignature& sig = rule.signatures.at(v);
    if (vr.interior.vertex_count() == 0) fail("vertex rule " + v + " has an empty interior");

    bool interior_ok = true;
    for (const Vertex& c : vr.interior.vertices())
      if (!is_vertex_symbol(c.symbol)) {
        fail("vertex rule " + v + ": child " + std::to_string(c.id) + " has symbol " + c.symbol +
             " not in the alphabet");
        interior_ok = false;
      }
    for (const Edge& e : vr.interior.edges()) {
      if (!is_edge_symbol(e.symbol)) {
        fail("vertex rule " + v + ": interior edge " + std::to_string(e.id) + " has symbol " +
             e.symbol + " not in the alphabet");
        interior_ok = false;
      }
      if (e.free_ends() != 0) {
        fail("vertex rule " + v + ": interior edge " + std::to_string(e.id) + " has a FREE end");
        interior_ok = false;
      }
    }

    // Stub bijection per slot.
    std::vector<std::vector<int>> seen(sig.size());
    bool stubs_ok = true;
    for (const Stub& s : vr.stubs) {
      if (!vr.interior.has_vertex(s.child)) {
        fail("vertex rule " + v + ": stub references unknown child " + std::to_string(s.child));
        stubs_ok = false;
        continue;
      }
      if (s.slot < 0 || s.slot >= static_cast<int>(sig.size())) {
        fail("vertex rule " + v + ": stub slot " + one_based(s.slot) + " out of range (signature has " +
             std::to_string(sig.size()) + " slots)");
        stubs_ok = false;
        continue;
      }
      seen[s.slot].push_back(s.index);
    }
    for (std::size_t i = 0; i < sig.size(); ++i) {
      const EdgeRule& er = rule.edge_rules.at(sig[i]);
      std::vector<int> idx = seen[i];
      std::sort(idx.begin(), idx.end());
      std::vector<int> want(er.children.size());
      for (std::size_t j = 0; j < want.size(); ++j) want[j] = static_cast<int>(j);
      if (idx != want) {
        std::string child_word = er.children.size() == 1 ? " child" : " children";
        fail("slot " + one_based(static_cast<int>(i)) + " of symbol " + v + ": " +
             std::to_string(idx.size()) + " stubs, EdgeRule(" + sig[i] + ") has " +
             std::to_string(er.children.size()) + child_word);
        stubs_ok = false;
      }
    }

    // Each child must end up with exactly its own signature's symbols.
    if (interior_ok && stubs_ok) {
      std::map<VertexId, std::vector<Symbol>> around;
      for (const Edge& e : vr.interior.edges()) {
        around[e.a].push_back(e.symbol);
        around[e.b].push_back(e.symbol);
      }
      for (const Stub& s : vr.stubs)
        around[s.child].push_back(rule.edge_rules.at(sig[s.slot]).children[s.index]);
      for (const Vertex& c : vr.interior.vertices()) {
        std::vector<Symbol> got = sorted_copy(around[c.id]);
        std::vector<Symbol> want = sorted_copy(rule.signatures.at(c.symbol));
        if (got != want)
          fail("vertex rule " + v + ": child " + std::to_string(c.id) + " (symbol " + c.symbol +
               ") receives edges " + join(got) + " but signature(" + c.symbol + ") is " + join(want));
      }
    }
  }

  if (rule.seed.vertex_count() == 0) fail("seed level is empty");
  for (const Vertex& v : rule.seed.vertices()) {
    if (!is_vertex_symbol(v.symbol)) {
      fail("seed vertex " + std::to_string(v.id) + " has symbol " + v.symbol + " not in the alphabet");
      continue;
    }
    std::vector<Symbol> got = incident_symbols(rule.seed, v.id);
    std::vector<Symbol> want = sorted_copy(rule.signatures.at(v.symbol));
    if (got.size() != want.size())
      fail("seed vertex " + std::to_string(v.id) + " (symbol " + v.symbol + "): degree " +
           std::to_string(got.size()) + " but signature length " + std::to_string(want.size()));
    else if (got != want)
      fail("seed vertex " + std::to_string(v.id) + " (symbol " + v.symbol + "): incident symbols " +
           join(got) + " do not match signature " + join(want));
  }
  for (const Edge& e : rule.seed.edges()) {
    if (!is_edge_symbol(e.symbol))
      fail("seed edge " + std::to_string(e.id) + " has symbol " + e.symbol + " not in the alphabet");
    if (e.free_ends() != 0) fail("seed edge " + std::to_string(e.id) + " has a FREE end");
  }
  return report;
}

void SlotAssignment::set(VertexId v, std::vector<EdgeId> edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) slot_[{v, edges[i]}] = static_cast<int>(i);
  by_vertex_[v] = std::move(edges);
}

SlotAssignment assign_slots(const LabeledGraph& level,
                            const std::map<Symbol, StarSignature>& signatures) {
  std::map<VertexId, std::vector<const Edge*>> incident;
  for (const Vertex& v : level.vertices()) incident[v.id];
  bool repeated = false;
  for (const Edge& e : level.edges()) {
    if (e.free_ends() != 0)
      throw StructuralError("level edge " + std::to_string(e.id) + " has a FREE end");
    incident[e.a].push_back(&e);
    incident[e.b].push_back(&e);
  }
  for (auto& [v, es] : incident) {
    std::set<Symbol> distinct;
    for (const Edge* e : es) distinct.insert(e->symbol);
    if (distinct.size() < es.size()) repeated = true;
  }

  // Neighbour positions only matter to break ties between equal symbols.
  std::map<VertexId, int> position;
  if (repeated) position = canonical_labeling(level).positions();

  SlotAssignment out;
  for (const Vertex& v : level.vertices()) {
    auto sig_it = signatures.find(v.symbol);
    if (sig_it == signatures.end())
      throw StructuralError("vertex " + std::to_string(v.id) + " has symbol " + v.symbol +
                            " with no signature");
    const StarSignature& sig = sig_it->second;
    std::vector<const Edge*>& es = incident[v.id];
    std::vector<Symbol> got;
    for (const Edge* e : es) got.push_back(e->symbol);
    if (sorted_copy(got) != sorted_copy(sig))
      throw StructuralError("vertex " + std::to_string(v.id) + " (symbol " + v.symbol +
                            ") has incident symbols " + join(sorted_copy(got)) +
                            " but signature " + join(sig));
    auto key = [&](const Edge* e) {
      VertexId nb = e->other(v.id);
      return std::tuple(e->symbol, repeated ? position.at(nb) : 0, e->id);
    };
    std::sort(es.begin(), es.end(), [&](const Edge* x, const Edge* y) { return key(x) < key(y); });
    std::vector<EdgeId> slots(sig.size(), -1);
    std::map<Symbol, std::size_t> cursor;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      // i-th slot takes the next unused incident edge of its symbol.
      const Symbol& s = sig[i];
      std::size_t& c = cursor[s];
      while (es[c]->symbol != s) ++c;
      slots[i] = es[c]->id;
      ++c;
    }
    out.set(v.id, std::move(slots));
  }
  return out;
}

Expansion expand_level(const LabeledGraph& level, const CombRule& rule) {
  SlotAssignment slots = assign_slots(level, rule.signatures);

  // (slot, index) -> child, per vertex symbol.
  std::map<Symbol, std::map<std::pair<int, int>, VertexId>> stub_child;
  for (const auto& [v, vr] : rule.vertex_rules)
    for (const Stub& s : vr.stubs) stub_child[v][{s.slot, s.index}] = s.child;

  Expansion out;
  std::map<std::pair<VertexId, VertexId>, VertexId> copy_of;  // (parent, interior id) -> new id
  VertexId next_vertex = 0;
  for (const Vertex& u : level.vertices()) {
    auto it = rule.vertex_rules.find(u.symbol);
    if (it == rule.vertex_rules.end())
      throw StructuralError("vertex " + std::to_string(u.id) + " has symbol " + u.symbol +
                            " with no vertex rule");
    for (const Vertex& c : it->second.interior.vertices()) {
      out.next.add_vertex(next_vertex, c.symbol);
      out.pred[next_vertex] = u.id;
      copy_of[{u.id, c.id}] = next_vertex++;
    }
  }
  EdgeId next_edge = 0;
  for (const Vertex& u : level.vertices())
    for (const Edge& e : rule.vertex_rules.at(u.symbol).interior.edges())
      out.next.add_edge(next_edge++, e.symbol, copy_of.at({u.id, e.a}), copy_of.at({u.id, e.b}));

  for (const Edge& e : level.edges()) {
    const Symbol& sa = level.vertex(e.a).symbol;
    const Symbol& sb = level.vertex(e.b).symbol;
    int ia = slots.slot_of(e.a, e.id);
    int ib = slots.slot_of(e.b, e.id);
    const std::vector<Symbol>& children = rule.edge_rules.at(e.symbol).children;
    for (int j = 0; j < static_cast<int>(children.size()); ++j) {
      VertexId ca = copy_of.at({e.a, stub_child.at(sa).at({ia, j})});
      VertexId cb = copy_of.at({e.b, stub_child.at(sb).at({ib, j})});
      out.next.add_edge(next_edge++, children[j], ca, cb);
    }
  }
  return out;
}

HistoryGraph build_history(const CombRule& rule, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  ValidationReport report = validate_rule(rule);
  if (!report.ok()) throw ValidationError(std::move(report));

  HistoryGraph h = HistoryGraph::with_origin(rule.alphabet.origin_symbol);
  Predecessor to_origin;
  for (const Vertex& v : rule.seed.vertices()) to_origin[v.id] = 0;
  h.push_level(rule.seed, to_origin);
  for (int n = 2; n <= depth; ++n) {
    Expansion x = expand_level(h.levels.back(), rule);
    h.push_level(std::move(x.next), x.pred);
  }
  return h;
}

}  // namespace fsr

#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fsr/graph.hpp"
#include "fsr/history.hpp"

namespace fsr {

struct LabelAlphabet {
  std::set<Symbol> vertex_symbols;
  std::set<Symbol> edge_symbols;
  Symbol origin_symbol = kDefaultOriginSymbol;

  friend bool operator==(const LabelAlphabet&, const LabelAlphabet&) = default;
};

/// Ordered edge symbols around a vertex. The order resolves which concrete
/// incident edge plays which role when a symbol repeats.
using StarSignature = std::vector<Symbol>;

/// Subdivision of one edge: an ordered list of child edge symbols, possibly empty.
struct EdgeRule {
  Symbol parent;
  std::vector<Symbol> children;

  friend bool operator==(const EdgeRule&, const EdgeRule&) = default;
};

/// Attaches the child edge `index` of the parent's slot `slot` to `child`.
/// Both indices are zero-based; documents and messages print them one-based.
struct Stub {
  VertexId child = 0;
  int slot = 0;
  int index = 0;

  friend bool operator==(const Stub&, const Stub&) = default;
};

struct VertexRule {
  Symbol parent;
  LabeledGraph interior;
  std::vector<Stub> stubs;

  friend bool operator==(const VertexRule&, const VertexRule&) = default;
};

/// Machine form of a combinatorial subdivision rule.
struct CombRule {
  LabelAlphabet alphabet;
  std::map<Symbol, StarSignature> signatures;
  std::map<Symbol, VertexRule> vertex_rules;
  std::map<Symbol, EdgeRule> edge_rules;
  LabeledGraph seed;

  friend bool operator==(const CombRule&, const CombRule&) = default;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate_rule(const CombRule& rule);

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Which incident edge fills which signature slot, per vertex.
class SlotAssignment {
 public:
  // Edge occupying `slot` at vertex v.
  EdgeId edge_at(VertexId v, int slot) const { return by_vertex_.at(v).at(slot); }
  // Slot of edge e at its endpoint v.
  int slot_of(VertexId v, EdgeId e) const { return slot_.at({v, e}); }
  const std::vector<EdgeId>& slots(VertexId v) const { return by_vertex_.at(v); }

  void set(VertexId v, std::vector<EdgeId> edges);

 private:
  std::map<VertexId, std::vector<EdgeId>> by_vertex_;
  std::map<std::pair<VertexId, EdgeId>, int> slot_;
};

/// Canonical slot assignment: incident edges of each vertex sorted by
/// (symbol, canonical position of the neighbour, edge id) and dealt to the
/// signature slots of equal symbol in signature order. Isomorphic inputs get
/// assignments that correspond under some isomorphism.
/// Throws StructuralError if a vertex's incident symbols differ from its signature.
SlotAssignment assign_slots(const LabeledGraph& level,
                            const std::map<Symbol, StarSignature>& signatures);

struct Expansion {
  LabeledGraph next;
  Predecessor pred;
};

/// One subdivision step. Output ids: children numbered parent by parent in id
/// order; interior edges first, then crossing edges per level edge in j order.
Expansion expand_level(const LabeledGraph& level, const CombRule& rule);

/// Origin, seed as level 1, then depth - 1 expansions.
HistoryGraph build_history(const CombRule& rule, int depth);

}  // namespace fsr

#include "fsr/realizer.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "fsr/canon.hpp"

namespace fsr {

std::string to_string(CellKind kind) {
  switch (kind) {
    case CellKind::Ball3: return "Ball3";
    case CellKind::BoundaryDisk: return "BoundaryDisk";
    case CellKind::SubDisk: return "SubDisk";
    case CellKind::InteriorDisk: return "InteriorDisk";
    case CellKind::IdealSphereRegion: return "IdealSphereRegion";
    case CellKind::IdealBlock: return "IdealBlock";
    case CellKind::IdealComplement: return "IdealComplement";
  }
  return "?";
}

Color Cell3::color() const {
  switch (kind) {
    case CellKind::Ball3:
    case CellKind::BoundaryDisk:
    case CellKind::SubDisk:
    case CellKind::InteriorDisk: return Color::NonIdeal;
    default: return Color::Ideal;
  }
}

int Complex3::add_cell(CellKind kind, Symbol symbol, int index, std::string host) {
  int id = static_cast<int>(cells.size());
  cells.push_back({id, kind, std::move(symbol), index, std::move(host)});
  return id;
}

const Cell3& Complex3::cell(int id) const {
  if (id < 0 || id >= static_cast<int>(cells.size()))
    throw StructuralError("unknown cell " + std::to_string(id) + " in " + name);
  return cells[id];
}

std::size_t Complex3::count(CellKind kind) const {
  return std::count_if(cells.begin(), cells.end(), [&](const Cell3& c) { return c.kind == kind; });
}

std::size_t Complex3::count(CellKind kind, const Symbol& symbol) const {
  return std::count_if(cells.begin(), cells.end(),
                       [&](const Cell3& c) { return c.kind == kind && c.symbol == symbol; });
}

int Complex3::find(CellKind kind, const Symbol& symbol, int index, const std::string& host) const {
  for (const Cell3& c : cells)
    if (c.kind == kind && c.symbol == symbol && c.index == index && c.host == host) return c.id;
  return -1;
}

void validate_complex(const Complex3& c, bool quotient) {
  for (std::size_t i = 0; i < c.cells.size(); ++i)
    if (c.cells[i].id != static_cast<int>(i)) throw StructuralError(c.name + ": cell ids are not dense");
  std::map<int, int> balls_on_disk;
  for (const Incidence& inc : c.incidences) {
    if (c.cell(inc.ball).dimension() != 3 || c.cell(inc.disk).dimension() != 2)
      throw StructuralError(c.name + ": incidence " + std::to_string(inc.ball) + "/" +
                            std::to_string(inc.disk) + " does not join a 3-cell to a 2-cell");
    if (c.cell(inc.disk).kind == CellKind::BoundaryDisk) ++balls_on_disk[inc.disk];
  }
  for (const Identification& id : c.identifications) {
    const Cell3& a = c.cell(id.a);
    const Cell3& b = c.cell(id.b);
    if (a.id == b.id) throw StructuralError(c.name + ": cell " + std::to_string(a.id) + " identified with itself");
    if (a.kind != b.kind || a.symbol != b.symbol)
      throw StructuralError(c.name + ": cells " + std::to_string(a.id) + " and " + std::to_string(b.id) +
                            " differ in kind or symbol");
  }
  if (!quotient)
    for (const auto& [disk, n] : balls_on_disk)
      if (n > 2)
        throw StructuralError(c.name + ": boundary disk " + std::to_string(disk) + " meets " +
                              std::to_string(n) + " balls");
}

std::vector<std::string> check_cellular_map(const Complex3& source, const Complex3& target,
                                            const CellularMap& map) {
  std::vector<std::string> out;
  for (const Cell3& c : source.cells) {
    auto it = map.image.find(c.id);
    std::string name = to_string(c.kind) + " " + std::to_string(c.id);
    if (it == map.image.end()) {
      out.push_back(name + " has no image");
      continue;
    }
    if (it->second < 0 || it->second >= static_cast<int>(target.cells.size())) {
      out.push_back(name + " maps to unknown cell " + std::to_string(it->second));
      continue;
    }
    const Cell3& t = target.cell(it->second);
    if (t.dimension() != c.dimension()) out.push_back(name + " changes dimension");
    if (t.color() != c.color()) out.push_back(name + " changes colour");
  }
  std::set<std::pair<int, int>> target_incidences;
  for (const Incidence& inc : target.incidences) target_incidences.insert({inc.ball, inc.disk});
  for (const Incidence& inc : source.incidences) {
    auto b = map.image.find(inc.ball), d = map.image.find(inc.disk);
    if (b == map.image.end() || d == map.image.end()) continue;
    if (!target_incidences.count({b->second, d->second}))
      out.push_back("incidence " + std::to_string(inc.ball) + "/" + std::to_string(inc.disk) +
                    " has no image incidence");
  }
  return out;
}

Complex3 build_base_complex(const CombRule& rule) {
  ValidationReport report = validate_rule(rule);
  if (!report.ok()) throw ValidationError(report);
  Complex3 c;
  c.name = "base";
  std::map<Symbol, int> ball, disk, region;
  for (const Symbol& v : rule.alphabet.vertex_symbols) ball[v] = c.add_cell(CellKind::Ball3, v);
  for (const Symbol& e : rule.alphabet.edge_symbols) disk[e] = c.add_cell(CellKind::BoundaryDisk, e);
  for (const Symbol& v : rule.alphabet.vertex_symbols) {
    region[v] = c.add_cell(CellKind::IdealSphereRegion, v);
    c.incidences.push_back({ball[v], region[v]});
    const StarSignature& sig = rule.signatures.at(v);
    for (int i = 0; i < static_cast<int>(sig.size()); ++i) c.incidences.push_back({ball[v], disk.at(sig[i]), i});
  }
  for (const Symbol& v : rule.alphabet.vertex_symbols) {
    int block = c.add_cell(CellKind::IdealBlock, v);
    c.attachments.push_back({block, ball[v], "inner"});
    c.attachments.push_back({block, region[v], "outer"});
  }
  return c;
}

namespace {

// Slots of each child of one vertex rule: incident interior edges in id
// order, then stubs in (slot, index) order, dealt to the child's signature
// slots of equal symbol.
std::map<std::pair<VertexId, EdgeId>, int> child_interior_slots(const CombRule& rule, const VertexRule& vr,
                                                                std::map<std::size_t, int>& stub_slot) {
  std::map<VertexId, std::vector<bool>> used;
  for (const Vertex& c : vr.interior.vertices())
    used[c.id].assign(rule.signatures.at(c.symbol).size(), false);
  auto take = [&](VertexId child, const Symbol& s) {
    const StarSignature& sig = rule.signatures.at(vr.interior.vertex(child).symbol);
    auto& u = used.at(child);
    for (int i = 0; i < static_cast<int>(sig.size()); ++i)
      if (!u[i] && sig[i] == s) {
        u[i] = true;
        return i;
      }
    throw StructuralError("vertex rule " + vr.parent + ": child " + std::to_string(child) +
                          " has no free slot for symbol " + s);
  };
  std::map<std::pair<VertexId, EdgeId>, int> interior;
  for (const Vertex& c : vr.interior.vertices())
    for (EdgeId e : vr.interior.incident_edges(c.id)) interior[{c.id, e}] = take(c.id, vr.interior.edge(e).symbol);
  std::vector<std::size_t> order(vr.stubs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::tie(vr.stubs[x].slot, vr.stubs[x].index) < std::tie(vr.stubs[y].slot, vr.stubs[y].index);
  });
  const StarSignature& parent_sig = rule.signatures.at(vr.parent);
  for (std::size_t i : order) {
    const Stub& s = vr.stubs[i];
    const Symbol& e = parent_sig.at(s.slot);
    stub_slot[i] = take(s.child, rule.edge_rules.at(e).children.at(s.index));
  }
  return interior;
}

}  // namespace

SubdividedComplex build_subdivided_complex(const CombRule& rule) {
  Complex3 base = build_base_complex(rule);
  auto base_cell = [&](CellKind kind, const Symbol& s) {
    int id = base.find(kind, s);
    if (id < 0) throw StructuralError("base complex has no " + to_string(kind) + " " + s);
    return id;
  };

  SubdividedComplex out;
  Complex3& c = out.complex;
  c.name = "subdivided";
  auto& phi = out.phi.image;

  std::map<std::pair<Symbol, int>, int> subdisk;
  for (const Symbol& e : rule.alphabet.edge_symbols) {
    const auto& children = rule.edge_rules.at(e).children;
    for (int j = 0; j < static_cast<int>(children.size()); ++j) {
      int id = c.add_cell(CellKind::SubDisk, e, j);
      subdisk[{e, j}] = id;
      phi[id] = base_cell(CellKind::BoundaryDisk, children[j]);
    }
    for (const Symbol& v : rule.alphabet.vertex_symbols) {
      const StarSignature& sig = rule.signatures.at(v);
      if (std::find(sig.begin(), sig.end(), e) == sig.end()) continue;
      int id = c.add_cell(CellKind::IdealSphereRegion, v, -1, e);
      phi[id] = base_cell(CellKind::IdealSphereRegion, v);
      break;
    }
  }

  for (const Symbol& v : rule.alphabet.vertex_symbols) {
    const VertexRule& vr = rule.vertex_rules.at(v);
    const StarSignature& sig = rule.signatures.at(v);
    int region = c.add_cell(CellKind::IdealSphereRegion, v);
    phi[region] = base_cell(CellKind::IdealSphereRegion, v);

    std::map<VertexId, int> child;
    for (const Vertex& w : vr.interior.vertices()) {
      int id = c.add_cell(CellKind::Ball3, w.symbol, w.id, v);
      child[w.id] = id;
      phi[id] = base_cell(CellKind::Ball3, w.symbol);
    }
    std::map<std::size_t, int> stub_slot;
    auto interior_slot = child_interior_slots(rule, vr, stub_slot);
    for (const Edge& f : vr.interior.edges()) {
      int id = c.add_cell(CellKind::InteriorDisk, f.symbol, f.id, v);
      phi[id] = base_cell(CellKind::BoundaryDisk, f.symbol);
      c.incidences.push_back({child.at(f.a), id, interior_slot.at({f.a, f.id})});
      c.incidences.push_back({child.at(f.b), id, interior_slot.at({f.b, f.id})});
    }
    for (std::size_t i = 0; i < vr.stubs.size(); ++i) {
      const Stub& s = vr.stubs[i];
      auto it = subdisk.find({sig.at(s.slot), s.index});
      if (it == subdisk.end())
        throw StructuralError("vertex rule " + v + ": stub (" + std::to_string(s.slot + 1) + ", " +
                              std::to_string(s.index + 1) + ") has no subdisk");
      c.incidences.push_back({child.at(s.child), it->second, stub_slot.at(i), s.slot});
    }
    int complement = c.add_cell(CellKind::IdealComplement, v, -1, v);
    phi[complement] = base_cell(CellKind::IdealBlock, v);
    for (const auto& [w, id] : child) c.attachments.push_back({complement, id, "surrounds"});
  }
  for (const Symbol& v : rule.alphabet.vertex_symbols) {
    int block = c.add_cell(CellKind::IdealBlock, v);
    phi[block] = base_cell(CellKind::IdealBlock, v);
  }
  return out;
}

Complex3 build_seed_complex(const CombRule& rule) {
  ValidationReport report = validate_rule(rule);
  if (!report.ok()) throw ValidationError(report);
  Complex3 c;
  c.name = "seed";
  SlotAssignment slots = assign_slots(rule.seed, rule.signatures);
  std::map<std::pair<VertexId, int>, int> disk;
  for (const Vertex& u : rule.seed.vertices()) {
    int ball = c.add_cell(CellKind::Ball3, u.symbol, u.id);
    int region = c.add_cell(CellKind::IdealSphereRegion, u.symbol, u.id);
    c.incidences.push_back({ball, region});
    const StarSignature& sig = rule.signatures.at(u.symbol);
    for (int i = 0; i < static_cast<int>(sig.size()); ++i) {
      int d = c.add_cell(CellKind::BoundaryDisk, sig[i], i, std::to_string(ball));
      c.incidences.push_back({ball, d, i});
      disk[{u.id, i}] = d;
    }
  }
  for (const Edge& e : rule.seed.edges()) {
    if (e.free_ends()) continue;
    c.identifications.push_back(
        {disk.at({e.a, slots.slot_of(e.a, e.id)}), disk.at({e.b, slots.slot_of(e.b, e.id)}), true});
  }
  return c;
}

CellularMap seed_structure_map(const Complex3& seed, const Complex3& base) {
  CellularMap m;
  for (const Cell3& c : seed.cells) {
    int target = base.find(c.kind, c.symbol);
    if (target < 0) throw StructuralError("seed cell " + std::to_string(c.id) + " has no base cell");
    m.image[c.id] = target;
  }
  return m;
}

Pair3D build_pair(const CombRule& rule) {
  Pair3D p;
  p.base = build_base_complex(rule);
  SubdividedComplex sub = build_subdivided_complex(rule);
  p.subdivided = std::move(sub.complex);
  p.phi = std::move(sub.phi);
  p.seed_complex = build_seed_complex(rule);
  p.structure = seed_structure_map(p.seed_complex, p.base);
  return p;
}

namespace {

LabeledGraph dual_of_seed(const Complex3& seed, const Complex3& base, const CellularMap* structure) {
  auto symbol = [&](const Cell3& c) {
    return structure ? base.cell(structure->image.at(c.id)).symbol : c.symbol;
  };
  LabeledGraph g;
  std::map<int, int> owner;  // disk -> ball cell
  for (const Incidence& inc : seed.incidences) owner[inc.disk] = inc.ball;
  for (const Cell3& c : seed.cells)
    if (c.kind == CellKind::Ball3) g.add_vertex(c.index, symbol(c));
  for (const Identification& id : seed.identifications) {
    const Cell3& a = seed.cell(owner.at(id.a));
    const Cell3& b = seed.cell(owner.at(id.b));
    g.add_edge(symbol(seed.cell(id.a)), a.index, b.index);
  }
  return g;
}

// Child inventory of one vertex symbol, read from the subdivided complex.
struct Inventory {
  std::vector<Symbol> children;                         // local index -> symbol
  std::vector<std::tuple<Symbol, int, int>> interior;   // (symbol, local a, local b)
  std::map<std::pair<int, int>, int> exterior;          // (parent slot, j) -> local
};

}  // namespace

LabeledGraph seed_dual_graph(const Complex3& seed) { return dual_of_seed(seed, seed, nullptr); }

CellCountReport check_cell_counts(const CombRule& rule, const Pair3D& pair) {
  CellCountReport r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.violations.push_back(std::move(msg));
  };
  const auto nv = rule.alphabet.vertex_symbols.size(), ne = rule.alphabet.edge_symbols.size();
  if (pair.base.count(CellKind::Ball3) != nv) fail("base has " + std::to_string(pair.base.count(CellKind::Ball3)) + " balls for " + std::to_string(nv) + " vertex symbols");
  if (pair.base.count(CellKind::BoundaryDisk) != ne) fail("base has " + std::to_string(pair.base.count(CellKind::BoundaryDisk)) + " boundary disks for " + std::to_string(ne) + " edge symbols");
  if (pair.base.count(CellKind::IdealBlock) != nv) fail("base has " + std::to_string(pair.base.count(CellKind::IdealBlock)) + " ideal blocks for " + std::to_string(nv) + " vertex symbols");

  for (const Symbol& e : rule.alphabet.edge_symbols) {
    std::size_t k = rule.edge_rules.at(e).children.size();
    std::size_t have = pair.subdivided.count(CellKind::SubDisk, e);
    if (have != k) fail("edge symbol " + e + ": " + std::to_string(have) + " subdisks, edge rule has " + std::to_string(k));
  }
  for (const Symbol& v : rule.alphabet.vertex_symbols) {
    std::size_t have = std::count_if(pair.subdivided.cells.begin(), pair.subdivided.cells.end(), [&](const Cell3& c) {
      return c.kind == CellKind::Ball3 && c.host == v;
    });
    std::size_t want = rule.vertex_rules.at(v).interior.vertex_count();
    if (have != want) fail("vertex symbol " + v + ": " + std::to_string(have) + " child balls, interior has " + std::to_string(want));

    // Exterior records over each slot biject with the subdisks of its symbol.
    const StarSignature& sig = rule.signatures.at(v);
    std::map<int, std::multiset<int>> over;
    for (const Incidence& inc : pair.subdivided.incidences) {
      if (inc.parent_slot < 0 || pair.subdivided.cell(inc.ball).host != v) continue;
      over[inc.parent_slot].insert(pair.subdivided.cell(inc.disk).index);
    }
    for (int i = 0; i < static_cast<int>(sig.size()); ++i) {
      std::multiset<int> want_j;
      for (int j = 0; j < static_cast<int>(rule.edge_rules.at(sig[i]).children.size()); ++j) want_j.insert(j);
      if (over[i] != want_j) fail("vertex symbol " + v + ": exterior disks over slot " + std::to_string(i + 1) + " do not match the subdisks of " + sig[i]);
    }
  }
  if (pair.seed_complex.count(CellKind::Ball3) != rule.seed.vertex_count()) fail("seed complex ball count differs from seed vertex count");
  if (pair.seed_complex.identifications.size() != rule.seed.edge_count()) fail("seed complex glued pairs differ from seed edge count");

  for (const std::string& v : check_cellular_map(pair.subdivided, pair.base, pair.phi)) fail("phi: " + v);
  for (const std::string& v : check_cellular_map(pair.seed_complex, pair.base, pair.structure)) fail("structure: " + v);
  try {
    validate_complex(pair.base, true);
    validate_complex(pair.subdivided, true);
    validate_complex(pair.seed_complex, false);
  } catch (const StructuralError& e) {
    fail(e.what());
  }
  return r;
}

HistoryGraph history_from_cells(const Pair3D& pair, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  const Complex3& base = pair.base;
  const Complex3& sub = pair.subdivided;
  auto image_symbol = [&](int cell) { return base.cell(pair.phi.image.at(cell)).symbol; };

  std::map<Symbol, StarSignature> signatures;
  {
    std::map<int, std::map<int, Symbol>> by_ball;
    for (const Incidence& inc : base.incidences)
      if (inc.slot >= 0) by_ball[inc.ball][inc.slot] = base.cell(inc.disk).symbol;
    for (const Cell3& c : base.cells)
      if (c.kind == CellKind::Ball3) {
        StarSignature& sig = signatures[c.symbol];
        for (const auto& [slot, s] : by_ball[c.id]) sig.push_back(s);
      }
  }

  std::map<Symbol, Inventory> inventory;
  std::map<int, std::pair<Symbol, int>> local;  // child ball cell -> (host, local index)
  std::map<Symbol, std::vector<const Cell3*>> balls_of;
  for (const Cell3& c : sub.cells)
    if (c.kind == CellKind::Ball3) balls_of[c.host].push_back(&c);
  for (auto& [v, balls] : balls_of) {
    std::sort(balls.begin(), balls.end(), [](const Cell3* x, const Cell3* y) { return x->index < y->index; });
    Inventory& inv = inventory[v];
    for (const Cell3* b : balls) {
      local[b->id] = {v, static_cast<int>(inv.children.size())};
      inv.children.push_back(image_symbol(b->id));
    }
  }
  std::map<int, std::vector<int>> disk_balls;
  for (const Incidence& inc : sub.incidences) {
    const Cell3& d = sub.cell(inc.disk);
    if (d.kind == CellKind::InteriorDisk) disk_balls[inc.disk].push_back(inc.ball);
    if (d.kind == CellKind::SubDisk && inc.parent_slot >= 0) {
      auto [v, i] = local.at(inc.ball);
      inventory[v].exterior[{inc.parent_slot, d.index}] = i;
    }
  }
  std::vector<const Cell3*> interior_disks;
  for (const Cell3& c : sub.cells)
    if (c.kind == CellKind::InteriorDisk) interior_disks.push_back(&c);
  std::sort(interior_disks.begin(), interior_disks.end(), [](const Cell3* x, const Cell3* y) {
    return std::tie(x->host, x->index) < std::tie(y->host, y->index);
  });
  for (const Cell3* d : interior_disks) {
    const auto& bs = disk_balls.at(d->id);
    if (bs.size() != 2) throw StructuralError("interior disk " + std::to_string(d->id) + " does not join two balls");
    inventory[d->host].interior.push_back({image_symbol(d->id), local.at(bs[0]).second, local.at(bs[1]).second});
  }
  std::map<Symbol, std::map<int, Symbol>> edge_children;
  for (const Cell3& c : sub.cells)
    if (c.kind == CellKind::SubDisk) edge_children[c.symbol][c.index] = image_symbol(c.id);

  HistoryGraph h = HistoryGraph::with_origin();
  LabeledGraph level = dual_of_seed(pair.seed_complex, base, &pair.structure);
  Predecessor up;
  for (const Vertex& v : level.vertices()) up[v.id] = 0;
  h.push_level(level, up);

  for (int n = 2; n <= depth; ++n) {
    SlotAssignment slots = assign_slots(level, signatures);
    LabeledGraph next;
    Predecessor pred;
    std::map<VertexId, VertexId> first;
    VertexId fresh = 0;
    for (const Vertex& u : level.vertices()) {
      auto it = inventory.find(u.symbol);
      if (it == inventory.end()) throw StructuralError("no child inventory for symbol " + u.symbol);
      first[u.id] = fresh;
      for (const Symbol& s : it->second.children) {
        next.add_vertex(fresh, s);
        pred[fresh++] = u.id;
      }
    }
    for (const Vertex& u : level.vertices())
      for (const auto& [s, a, b] : inventory.at(u.symbol).interior) next.add_edge(s, first[u.id] + a, first[u.id] + b);
    for (const Edge& e : level.edges()) {
      int sa = slots.slot_of(e.a, e.id), sb = slots.slot_of(e.b, e.id);
      const Inventory& ia = inventory.at(level.vertex(e.a).symbol);
      const Inventory& ib = inventory.at(level.vertex(e.b).symbol);
      for (const auto& [j, s] : edge_children[e.symbol])
        next.add_edge(s, first[e.a] + ia.exterior.at({sa, j}), first[e.b] + ib.exterior.at({sb, j}));
    }
    h.push_level(next, pred);
    level = std::move(next);
  }
  return h;
}

std::string RealizationReport::summary() const {
  std::ostringstream out;
  out << "realization depth " << depth << ": " << (pass ? "PASS" : "FAIL") << "\n";
  for (std::size_t n = 0; n < level_certificates.size(); ++n)
    out << "  level " << n << ": "
        << (level_certificates[n].first == level_certificates[n].second ? "isomorphic" : "different") << "\n";
  if (!pass) out << "  first failing level " << first_failing_level << ": " << detail << "\n";
  return out.str();
}

RealizationReport verify_realization(const CombRule& rule, int depth) {
  if (depth < 2) throw std::invalid_argument("depth must be at least 2");
  RealizationReport report;
  report.depth = depth;
  Pair3D pair = build_pair(rule);
  HistoryGraph from_cells = history_from_cells(pair, depth);
  HistoryGraph from_rule = build_history(rule, depth);

  auto cc = level_certificates(from_cells), cr = level_certificates(from_rule);
  for (std::size_t n = 0; n < cc.size(); ++n) report.level_certificates.push_back({cc[n], cr[n]});
  for (std::size_t n = 0; n < cc.size(); ++n)
    if (cc[n] != cr[n]) {
      report.first_failing_level = static_cast<int>(n);
      report.detail = "level graphs are not isomorphic (" + std::to_string(from_cells.levels[n].vertex_count()) +
                      " vs " + std::to_string(from_rule.levels[n].vertex_count()) + " vertices)";
      return report;
    }

  LabeledGraph fc = flatten(from_cells), fr = flatten(from_rule);
  CanonicalLabeling lc = canonical_labeling(fc), lr = canonical_labeling(fr);
  if (lc.certificate != lr.certificate) {
    // Smallest prefix on which no level witnesses commute with the predecessors.
    for (int n = 1; n <= depth; ++n) {
      HistoryGraph a = from_cells, b = from_rule;
      a.levels.resize(n + 1);
      a.vertical.resize(n + 1);
      b.levels.resize(n + 1);
      b.vertical.resize(n + 1);
      if (history_certificate(a) != history_certificate(b)) {
        report.first_failing_level = n;
        break;
      }
    }
    report.detail = "no level isomorphisms commute with the predecessor maps";
    return report;
  }

  std::vector<VertexId> oc = flatten_offsets(from_cells), orr = flatten_offsets(from_rule);
  auto level_of = [](const std::vector<VertexId>& offsets, VertexId id) {
    return static_cast<int>(std::upper_bound(offsets.begin(), offsets.end(), id) - offsets.begin()) - 1;
  };
  std::vector<std::map<VertexId, VertexId>> witness(from_cells.levels.size());
  for (std::size_t i = 0; i < lc.order.size(); ++i) {
    int n = level_of(oc, lc.order[i]), m = level_of(orr, lr.order[i]);
    if (n != m) {
      report.first_failing_level = n;
      report.detail = "witness does not preserve levels";
      return report;
    }
    witness[n][lc.order[i] - oc[n]] = lr.order[i] - orr[m];
  }
  for (std::size_t n = 0; n < from_cells.levels.size(); ++n) {
    if (!complete_edge_map(from_cells.levels[n], from_rule.levels[n], witness[n])) {
      report.first_failing_level = static_cast<int>(n);
      report.detail = "level witness is not a labeled isomorphism";
      return report;
    }
    if (n == 0) continue;
    Predecessor pc = from_cells.predecessor(n), pr = from_rule.predecessor(n);
    for (const auto& [x, p] : pc)
      if (pr.at(witness[n].at(x)) != witness[n - 1].at(p)) {
        report.first_failing_level = static_cast<int>(n);
        report.detail = "witness does not commute with the predecessor of vertex " + std::to_string(x);
        return report;
      }
  }
  report.pass = true;
  return report;
}

}  // namespace fsr

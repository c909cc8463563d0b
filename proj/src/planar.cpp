#include "fsr/planar.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace fsr {

namespace {

std::string side_name(int tile, int side) { return std::to_string(tile) + "." + std::to_string(side); }

}  // namespace

std::vector<std::string> validate_rule_2d(const SubdivisionRule2D& rule) {
  std::vector<std::string> out;
  auto fail = [&](std::string msg) { out.push_back(std::move(msg)); };

  for (const auto& [id, et] : rule.edge_types) {
    for (const std::string& c : et.children) {
      auto it = rule.edge_types.find(c);
      if (it == rule.edge_types.end()) {
        fail("edge type " + id + " has unknown child " + c);
        continue;
      }
      if (et.color == Color::Ideal && it->second.color != Color::Ideal)
        fail("ideal edge type " + id + " has non-ideal child " + c);
    }
  }
  bool any_nonideal = false;
  for (const auto& [id, tt] : rule.tile_types) {
    any_nonideal |= tt.color == Color::NonIdeal;
    if (tt.sides.size() < 2) fail("tile type " + id + " has fewer than two sides");
    bool sides_ok = true;
    for (const TileSide& s : tt.sides)
      if (!rule.edge_types.count(s.edge_type)) {
        fail("tile type " + id + " uses unknown edge type " + s.edge_type);
        sides_ok = false;
      }
    if (!sides_ok) continue;

    std::map<int, const TileType2D*> sub_type;
    bool subs_ok = true;
    for (const Subtile& st : tt.layout.subtiles) {
      auto it = rule.tile_types.find(st.type);
      if (it == rule.tile_types.end()) {
        fail("layout of " + id + ": subtile " + std::to_string(st.id) + " has unknown type " + st.type);
        subs_ok = false;
        continue;
      }
      if (sub_type.count(st.id)) fail("layout of " + id + ": duplicate subtile " + std::to_string(st.id));
      sub_type[st.id] = &it->second;
      if (tt.color == Color::Ideal && it->second.color != Color::Ideal)
        fail("ideal tile type " + id + " has non-ideal subtile " + std::to_string(st.id));
    }
    if (tt.layout.subtiles.empty()) fail("layout of " + id + " has no subtiles");
    if (!subs_ok) continue;

    std::map<std::pair<int, int>, int> covered;
    auto side_edge = [&](int sub, int side) -> const std::string* {
      auto it = sub_type.find(sub);
      if (it == sub_type.end() || side < 0 || side >= static_cast<int>(it->second->sides.size()))
        return nullptr;
      return &it->second->sides[side].edge_type;
    };
    for (const SubtileGluing& g : tt.layout.gluings) {
      for (auto [sub, side] : {std::pair{g.sub_a, g.side_a}, std::pair{g.sub_b, g.side_b}}) {
        const std::string* e = side_edge(sub, side);
        if (!e) {
          fail("layout of " + id + ": gluing references missing side " + side_name(sub, side));
          continue;
        }
        if (*e != g.edge_type)
          fail("layout of " + id + ": side " + side_name(sub, side) + " has edge type " + *e +
               " but is glued as " + g.edge_type);
        ++covered[{sub, side}];
      }
      if (g.sub_a == g.sub_b && g.side_a == g.side_b)
        fail("layout of " + id + ": side " + side_name(g.sub_a, g.side_a) + " glued to itself");
    }
    std::map<std::pair<int, int>, int> children_hit;
    for (const BoundarySlot& b : tt.layout.boundary) {
      const std::string* e = side_edge(b.subtile, b.side);
      if (!e) {
        fail("layout of " + id + ": boundary references missing side " + side_name(b.subtile, b.side));
        continue;
      }
      ++covered[{b.subtile, b.side}];
      if (b.parent_side < 0 || b.parent_side >= static_cast<int>(tt.sides.size())) {
        fail("layout of " + id + ": boundary parent side " + std::to_string(b.parent_side) + " out of range");
        continue;
      }
      const EdgeType2D& parent_edge = rule.edge_types.at(tt.sides[b.parent_side].edge_type);
      if (b.child_index < 0 || b.child_index >= static_cast<int>(parent_edge.children.size())) {
        fail("layout of " + id + ": boundary child index " + std::to_string(b.child_index) +
             " out of range on side " + std::to_string(b.parent_side));
        continue;
      }
      if (parent_edge.children[b.child_index] != *e)
        fail("layout of " + id + ": subtile side " + side_name(b.subtile, b.side) + " has edge type " + *e +
             " but covers child of type " + parent_edge.children[b.child_index]);
      ++children_hit[{b.parent_side, b.child_index}];
    }
    for (const auto& [sub, type] : sub_type)
      for (int s = 0; s < static_cast<int>(type->sides.size()); ++s) {
        int k = covered.count({sub, s}) ? covered[{sub, s}] : 0;
        if (k != 1)
          fail("layout of " + id + ": subtile side " + side_name(sub, s) + " is covered " +
               std::to_string(k) + " times");
      }
    for (int ps = 0; ps < static_cast<int>(tt.sides.size()); ++ps) {
      const EdgeType2D& parent_edge = rule.edge_types.at(tt.sides[ps].edge_type);
      for (int c = 0; c < static_cast<int>(parent_edge.children.size()); ++c) {
        int k = children_hit.count({ps, c}) ? children_hit[{ps, c}] : 0;
        if (k != 1)
          fail("layout of " + id + ": child " + std::to_string(c) + " of side " + std::to_string(ps) +
               " is assigned " + std::to_string(k) + " times");
      }
    }
  }
  if (!any_nonideal) fail("rule has no non-ideal tile type");
  return out;
}

void validate_surface(const Surface2D& x, const SubdivisionRule2D& rule) {
  std::map<int, const TileType2D*> type_of;
  for (const Tile& t : x.tiles) {
    auto it = rule.tile_types.find(t.type);
    if (it == rule.tile_types.end())
      throw StructuralError("tile " + std::to_string(t.id) + " has unknown type " + t.type);
    if (type_of.count(t.id)) throw StructuralError("duplicate tile id " + std::to_string(t.id));
    if (it->second.color != t.color)
      throw StructuralError("tile " + std::to_string(t.id) + " colour disagrees with type " + t.type);
    type_of[t.id] = &it->second;
  }
  std::set<std::pair<int, int>> used;
  for (std::size_t i = 0; i < x.gluings.size(); ++i) {
    const SideGluing& g = x.gluings[i];
    std::string name = "gluing " + std::to_string(i);
    if (g.tile_a == g.tile_b && g.side_a == g.side_b)
      throw StructuralError(name + " glues side " + side_name(g.tile_a, g.side_a) + " to itself");
    for (auto [tile, side] : {std::pair{g.tile_a, g.side_a}, std::pair{g.tile_b, g.side_b}}) {
      auto it = type_of.find(tile);
      if (it == type_of.end()) throw StructuralError(name + " references unknown tile " + std::to_string(tile));
      if (side < 0 || side >= static_cast<int>(it->second->sides.size()))
        throw StructuralError(name + " references missing side " + side_name(tile, side));
      if (it->second->sides[side].edge_type != g.edge_type)
        throw StructuralError(name + ": side " + side_name(tile, side) + " has edge type " +
                              it->second->sides[side].edge_type + ", gluing says " + g.edge_type);
      if (!used.insert({tile, side}).second)
        throw StructuralError(name + ": side " + side_name(tile, side) + " is glued twice");
    }
  }
}

Subdivision2D subdivide_with_lineage(const Surface2D& x, const SubdivisionRule2D& rule) {
  validate_surface(x, rule);
  Subdivision2D out;
  out.surface.name = x.name;
  std::map<std::pair<int, int>, int> new_id;  // (old tile, subtile id) -> new tile id
  int next = 0;
  for (const Tile& t : x.tiles) {
    const TileType2D& tt = rule.tile_types.at(t.type);
    for (const Subtile& st : tt.layout.subtiles) {
      out.surface.tiles.push_back({next, st.type, rule.tile_types.at(st.type).color});
      out.parent[next] = t.id;
      new_id[{t.id, st.id}] = next++;
    }
    for (const SubtileGluing& g : tt.layout.gluings)
      out.surface.gluings.push_back(
          {new_id.at({t.id, g.sub_a}), g.side_a, new_id.at({t.id, g.sub_b}), g.side_b, true, g.edge_type});
  }

  std::map<int, const TileType2D*> type_of;
  for (const Tile& t : x.tiles) type_of[t.id] = &rule.tile_types.at(t.type);
  auto boundary_side = [&](int tile, int side, int child) {
    for (const BoundarySlot& b : type_of.at(tile)->layout.boundary)
      if (b.parent_side == side && b.child_index == child)
        return std::pair{new_id.at({tile, b.subtile}), b.side};
    throw StructuralError("tile " + std::to_string(tile) + " side " + std::to_string(side) +
                          " has no subtile on child " + std::to_string(child));
  };

  for (std::size_t i = 0; i < x.gluings.size(); ++i) {
    const SideGluing& g = x.gluings[i];
    const std::vector<std::string>& children = rule.edge_types.at(g.edge_type).children;
    const int k = static_cast<int>(children.size());
    for (int c = 0; c < k; ++c) {
      int mate = g.reversed ? k - 1 - c : c;
      if (children[c] != children[mate])
        throw StructuralError("gluing " + std::to_string(i) + ": child " + std::to_string(c) + " (" +
                              children[c] + ") meets child " + std::to_string(mate) + " (" +
                              children[mate] + ")");
      auto [ta, sa] = boundary_side(g.tile_a, g.side_a, c);
      auto [tb, sb] = boundary_side(g.tile_b, g.side_b, mate);
      out.surface.gluings.push_back({ta, sa, tb, sb, g.reversed, children[c]});
    }
  }
  return out;
}

Surface2D subdivide_surface(const Surface2D& x, const SubdivisionRule2D& rule) {
  return subdivide_with_lineage(x, rule).surface;
}

std::vector<int> nonideal_tiles(const Surface2D& x) {
  std::vector<int> out;
  for (const Tile& t : x.tiles)
    if (t.color == Color::NonIdeal) out.push_back(t.id);
  return out;
}

LabeledGraph dual_graph(const Surface2D& x) {
  LabeledGraph g;
  std::map<int, Color> color;
  for (const Tile& t : x.tiles) {
    color[t.id] = t.color;
    if (t.color == Color::NonIdeal) g.add_vertex(t.id, t.type);
  }
  for (std::size_t i = 0; i < x.gluings.size(); ++i) {
    const SideGluing& s = x.gluings[i];
    if (color.at(s.tile_a) == Color::NonIdeal && color.at(s.tile_b) == Color::NonIdeal)
      g.add_edge(static_cast<EdgeId>(i), s.edge_type, s.tile_a, s.tile_b);
  }
  return g;
}

HistoryGraph history_graph_2d(const Surface2D& x, const SubdivisionRule2D& rule, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  validate_surface(x, rule);
  HistoryGraph h = HistoryGraph::with_origin();
  LabeledGraph first = dual_graph(x);
  Predecessor to_origin;
  for (const Vertex& v : first.vertices()) to_origin[v.id] = 0;
  h.push_level(std::move(first), to_origin);

  Surface2D current = x;
  for (int n = 2; n <= depth; ++n) {
    Subdivision2D step = subdivide_with_lineage(current, rule);
    LabeledGraph level = dual_graph(step.surface);
    Predecessor pred;
    for (const Vertex& v : level.vertices()) pred[v.id] = step.parent.at(v.id);
    h.push_level(std::move(level), pred);
    current = std::move(step.surface);
  }
  return h;
}

Surface2D surface_from_polygons(const std::string& name, const std::vector<std::vector<int>>& polygons,
                                const std::string& tile_type, const std::string& edge_type) {
  Surface2D s;
  s.name = name;
  struct SideRef {
    int tile, side, from, to;
  };
  std::map<std::pair<int, int>, std::vector<SideRef>> by_segment;
  for (int t = 0; t < static_cast<int>(polygons.size()); ++t) {
    s.tiles.push_back({t, tile_type, Color::NonIdeal});
    const auto& p = polygons[t];
    for (int i = 0; i < static_cast<int>(p.size()); ++i) {
      int from = p[i], to = p[(i + 1) % p.size()];
      by_segment[std::minmax(from, to)].push_back({t, i, from, to});
    }
  }
  for (const auto& [segment, refs] : by_segment) {
    if (refs.size() > 2)
      throw StructuralError("segment " + std::to_string(segment.first) + "-" + std::to_string(segment.second) +
                            " is shared by more than two sides");
    if (refs.size() == 2)
      s.gluings.push_back({refs[0].tile, refs[0].side, refs[1].tile, refs[1].side,
                           refs[0].from == refs[1].to, edge_type});
  }
  std::sort(s.gluings.begin(), s.gluings.end(), [](const SideGluing& x, const SideGluing& y) {
    return std::tie(x.tile_a, x.side_a) < std::tie(y.tile_a, y.side_a);
  });
  return s;
}

}  // namespace fsr

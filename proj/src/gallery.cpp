#include "fsr/gallery.hpp"

#include <stdexcept>

#include "fsr/infer.hpp"

namespace fsr::gallery {

namespace {

LabeledGraph triangle_seed() {
  LabeledGraph g;
  for (int i = 0; i < 3; ++i) g.add_vertex(i, "a");
  for (int i = 0; i < 3; ++i) g.add_edge(i, "h", i, (i + 1) % 3);
  return g;
}

CombRule cycle_rule(VertexRule vr) {
  CombRule r;
  r.alphabet.vertex_symbols = {"a"};
  r.alphabet.edge_symbols = {"h"};
  r.signatures["a"] = {"h", "h"};
  r.vertex_rules["a"] = std::move(vr);
  r.edge_rules["h"] = {"h", {"h"}};
  r.seed = triangle_seed();
  return r;
}

EdgeType2D edge_type(const std::string& id, std::vector<std::string> children,
                     Color color = Color::NonIdeal) {
  return {id, std::move(children), color};
}

std::vector<TileSide> sides(const std::string& e, int n) { return std::vector<TileSide>(n, TileSide{e, false}); }

// Layout of a tile that subdivides into one copy of itself.
TileLayout self_layout(const std::string& type, int n) {
  TileLayout l;
  l.subtiles.push_back({0, type});
  for (int s = 0; s < n; ++s) l.boundary.push_back({0, s, s, 0});
  return l;
}

}  // namespace

CombRule cycdb() {
  VertexRule vr;
  vr.parent = "a";
  vr.interior.add_vertex(0, "a");
  vr.interior.add_vertex(1, "a");
  vr.interior.add_edge(0, "h", 0, 1);
  vr.stubs = {{0, 0, 0}, {1, 1, 0}};
  return cycle_rule(std::move(vr));
}

CombRule ident() {
  VertexRule vr;
  vr.parent = "a";
  vr.interior.add_vertex(0, "a");
  vr.stubs = {{0, 0, 0}, {0, 1, 0}};
  return cycle_rule(std::move(vr));
}

CombRule bary_dual() { return infer_rule(history_graph_2d(tetra(), bary(), 3)); }

CombRule quad_dual() { return infer_rule(history_graph_2d(tor9(), quad(), 3)); }

SubdivisionRule2D identity_2d() {
  SubdivisionRule2D r;
  r.name = "IDENTITY2D";
  r.edge_types["E"] = edge_type("E", {"E"});
  r.tile_types["T"] = {"T", sides("E", 3), Color::NonIdeal, self_layout("T", 3)};
  r.tile_types["Q"] = {"Q", sides("E", 4), Color::NonIdeal, self_layout("Q", 4)};
  return r;
}

// Side i of a polygon runs from corner P_i to P_{i+1}; child 0 of a side lies
// next to P_i.
SubdivisionRule2D bary() {
  SubdivisionRule2D r;
  r.name = "BARY";
  r.edge_types["E"] = edge_type("E", {"E", "E"});
  TileLayout l;
  // Subtile 2i: P_i, M_i, C. Subtile 2i+1: M_i, P_{i+1}, C.
  // Side 0 lies on the parent; sides 1 and 2 meet the barycenter C.
  for (int s = 0; s < 6; ++s) l.subtiles.push_back({s, "T"});
  for (int i = 0; i < 3; ++i) {
    l.gluings.push_back({2 * i, 1, 2 * i + 1, 2, "E"});
    l.gluings.push_back({2 * i + 1, 1, (2 * i + 2) % 6, 2, "E"});
    l.boundary.push_back({2 * i, 0, i, 0});
    l.boundary.push_back({2 * i + 1, 0, i, 1});
  }
  r.tile_types["T"] = {"T", sides("E", 3), Color::NonIdeal, std::move(l)};
  return r;
}

SubdivisionRule2D quad() {
  SubdivisionRule2D r;
  r.name = "QUAD";
  r.edge_types["E"] = edge_type("E", {"E", "E"});
  TileLayout l;
  // Subtile i: P_i, M_i, C, M_{i-1}.
  for (int i = 0; i < 4; ++i) l.subtiles.push_back({i, "Q"});
  for (int i = 0; i < 4; ++i) {
    l.gluings.push_back({i, 1, (i + 1) % 4, 2, "E"});
    l.boundary.push_back({i, 0, i, 0});
    l.boundary.push_back({i, 3, (i + 3) % 4, 1});
  }
  r.tile_types["Q"] = {"Q", sides("E", 4), Color::NonIdeal, std::move(l)};
  return r;
}

SubdivisionRule2D sier() {
  SubdivisionRule2D r;
  r.name = "SIER";
  r.edge_types["E"] = edge_type("E", {"E", "E"});
  // Corner subtile i: P_i, M_i, M_{i-1}; subtile 3 is the middle triangle,
  // whose side i meets corner i.
  auto layout = [](const std::string& corner, const std::string& middle) {
    TileLayout l;
    for (int i = 0; i < 3; ++i) l.subtiles.push_back({i, corner});
    l.subtiles.push_back({3, middle});
    for (int i = 0; i < 3; ++i) {
      l.gluings.push_back({i, 1, 3, i, "E"});
      l.boundary.push_back({i, 0, i, 0});
      l.boundary.push_back({i, 2, (i + 2) % 3, 1});
    }
    return l;
  };
  r.tile_types["T"] = {"T", sides("E", 3), Color::NonIdeal, layout("T", "TI")};
  r.tile_types["TI"] = {"TI", sides("E", 3), Color::Ideal, layout("TI", "TI")};
  return r;
}

Surface2D tri1() { return surface_from_polygons("TRI1", {{0, 1, 2}}, "T", "E"); }

Surface2D tetra() {
  return surface_from_polygons("TETRA", {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}, "T", "E");
}

Surface2D tor9() {
  std::vector<std::vector<int>> squares;
  auto at = [](int r, int c) { return (r % 3) * 3 + (c % 3); };
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) squares.push_back({at(r, c), at(r, c + 1), at(r + 1, c + 1), at(r + 1, c)});
  return surface_from_polygons("TOR9", squares, "Q", "E");
}

std::vector<std::string> rule_names() { return {"CYCDB", "IDENT", "BARYDUAL", "QUADDUAL"}; }
std::vector<std::string> rule_2d_names() { return {"IDENTITY2D", "BARY", "QUAD", "SIER"}; }
std::vector<std::string> surface_names() { return {"TRI1", "TETRA", "TOR9"}; }

CombRule rule(const std::string& name) {
  if (name == "CYCDB") return cycdb();
  if (name == "IDENT") return ident();
  if (name == "BARYDUAL") return bary_dual();
  if (name == "QUADDUAL") return quad_dual();
  throw std::invalid_argument("unknown rule " + name);
}

SubdivisionRule2D rule_2d(const std::string& name) {
  if (name == "IDENTITY2D") return identity_2d();
  if (name == "BARY") return bary();
  if (name == "QUAD") return quad();
  if (name == "SIER") return sier();
  throw std::invalid_argument("unknown planar rule " + name);
}

Surface2D surface(const std::string& name) {
  if (name == "TRI1") return tri1();
  if (name == "TETRA") return tetra();
  if (name == "TOR9") return tor9();
  throw std::invalid_argument("unknown surface " + name);
}

}  // namespace fsr::gallery

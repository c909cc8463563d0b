#pragma once

#include <map>
#include <string>
#include <vector>

#include "fsr/graph.hpp"
#include "fsr/history.hpp"

namespace fsr {

enum class Color { NonIdeal, Ideal };

struct EdgeType2D {
  std::string id;
  std::vector<std::string> children;  // subdivision along the edge
  Color color = Color::NonIdeal;
};

struct TileSide {
  std::string edge_type;
  bool reversed = false;  // informational; child indices already fix the pairing
};

// Two subtile sides glued inside one parent tile.
struct SubtileGluing {
  int sub_a = 0, side_a = 0;
  int sub_b = 0, side_b = 0;
  std::string edge_type;
};

// A subtile side lying on the parent boundary: child `child_index` of the
// parent's side `parent_side`.
struct BoundarySlot {
  int subtile = 0, side = 0;
  int parent_side = 0, child_index = 0;
};

struct Subtile {
  int id = 0;
  std::string type;
};

struct TileLayout {
  std::vector<Subtile> subtiles;
  std::vector<SubtileGluing> gluings;
  std::vector<BoundarySlot> boundary;
};

struct TileType2D {
  std::string id;
  std::vector<TileSide> sides;
  Color color = Color::NonIdeal;
  TileLayout layout;
};

/// Colored planar subdivision rule: tile types, their layouts and edge-type
/// subdivisions. All side and child indices are zero-based.
struct SubdivisionRule2D {
  std::string name;
  std::map<std::string, EdgeType2D> edge_types;
  std::map<std::string, TileType2D> tile_types;
};

struct Tile {
  int id = 0;
  std::string type;
  Color color = Color::NonIdeal;
};

/// Tile sides identified. With `reversed`, child c of one side meets child
/// k-1-c of the other (the usual case for consistently oriented tiles).
struct SideGluing {
  int tile_a = 0, side_a = 0;
  int tile_b = 0, side_b = 0;
  bool reversed = true;
  std::string edge_type;
};

/// An R-complex: tiles typed by the rule, glued along sides. Unglued sides
/// are the boundary.
struct Surface2D {
  std::string name;
  std::vector<Tile> tiles;
  std::vector<SideGluing> gluings;
};

std::vector<std::string> validate_rule_2d(const SubdivisionRule2D& rule);

/// Throws StructuralError naming the first problem.
void validate_surface(const Surface2D& x, const SubdivisionRule2D& rule);

struct Subdivision2D {
  Surface2D surface;
  std::map<int, int> parent;  // new tile id -> old tile id
};

Subdivision2D subdivide_with_lineage(const Surface2D& x, const SubdivisionRule2D& rule);
Surface2D subdivide_surface(const Surface2D& x, const SubdivisionRule2D& rule);

std::vector<int> nonideal_tiles(const Surface2D& x);

/// One vertex per non-ideal tile, one edge per gluing between two non-ideal tiles.
LabeledGraph dual_graph(const Surface2D& x);

HistoryGraph history_graph_2d(const Surface2D& x, const SubdivisionRule2D& rule, int depth);

/// Surface from polygons given as counter-clockwise vertex-label cycles. Side
/// i runs from p[i] to p[i+1]; a directed side matched by its reverse in
/// another polygon is glued with reversed = true, a same-direction match with
/// reversed = false.
Surface2D surface_from_polygons(const std::string& name, const std::vector<std::vector<int>>& polygons,
                                const std::string& tile_type, const std::string& edge_type);

}  // namespace fsr

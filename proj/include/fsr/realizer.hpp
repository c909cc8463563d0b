#pragma once

#include <map>
#include <string>
#include <vector>

#include "fsr/history.hpp"
#include "fsr/planar.hpp"
#include "fsr/rule.hpp"

namespace fsr {

enum class CellKind {
  Ball3,
  BoundaryDisk,
  SubDisk,
  InteriorDisk,
  IdealSphereRegion,
  IdealBlock,
  IdealComplement,
};

std::string to_string(CellKind kind);

/// One cell of a symbolic 3-dimensional complex.
///
/// `symbol` is the vertex symbol of balls, sphere regions, blocks and
/// complements and the edge symbol of disks. `index` is the child position of
/// a SubDisk, the interior vertex id of a child ball, the interior edge id of
/// an InteriorDisk, the seed vertex id of a seed ball and the slot of a seed
/// disk; -1 otherwise. `host` names the parent vertex symbol of child balls,
/// interior disks and complements, the edge symbol whose disk a remainder
/// sphere region lies on, and the owning ball id (as text) of seed disks.
struct Cell3 {
  int id = 0;
  CellKind kind = CellKind::Ball3;
  Symbol symbol;
  int index = -1;
  std::string host;

  int dimension() const { return kind == CellKind::Ball3 || kind == CellKind::IdealBlock ||
                                         kind == CellKind::IdealComplement
                                     ? 3
                                     : 2; }
  Color color() const;

  friend bool operator==(const Cell3&, const Cell3&) = default;
};

/// A 2-cell lying on the boundary of a 3-cell. `slot` is the signature slot
/// of the ball the disk occupies; `parent_slot` is the parent slot an
/// exterior disk record of a child ball lies over.
struct Incidence {
  int ball = 0;
  int disk = 0;
  int slot = -1;
  int parent_slot = -1;

  friend bool operator==(const Incidence&, const Incidence&) = default;
};

struct Identification {
  int a = 0;
  int b = 0;
  bool reversed = true;

  friend bool operator==(const Identification&, const Identification&) = default;
};

/// Symbolic attachment of an ideal 3-cell along another cell.
struct Attachment {
  int cell = 0;
  int target = 0;
  std::string role;

  friend bool operator==(const Attachment&, const Attachment&) = default;
};

struct Complex3 {
  std::string name;
  std::vector<Cell3> cells;  // cells[i].id == i
  std::vector<Incidence> incidences;
  std::vector<Identification> identifications;
  std::vector<Attachment> attachments;

  int add_cell(CellKind kind, Symbol symbol, int index = -1, std::string host = {});
  const Cell3& cell(int id) const;
  std::size_t count(CellKind kind) const;
  std::size_t count(CellKind kind, const Symbol& symbol) const;
  // Cell of the given kind and symbol with index and host; -1 if none.
  int find(CellKind kind, const Symbol& symbol, int index = -1, const std::string& host = {}) const;

  friend bool operator==(const Complex3&, const Complex3&) = default;
};

/// Structural checks: incidences join a 3-cell to a 2-cell, identifications
/// join distinct cells of equal kind and symbol, and, unless `quotient`, no
/// BoundaryDisk meets more than two 3-cells. Throws StructuralError.
void validate_complex(const Complex3& c, bool quotient);

struct CellularMap {
  std::map<int, int> image;

  friend bool operator==(const CellularMap&, const CellularMap&) = default;
};

/// Violations of totality, dimension, colour and incidence preservation.
std::vector<std::string> check_cellular_map(const Complex3& source, const Complex3& target,
                                            const CellularMap& map);

struct Pair3D {
  Complex3 base;        // S_R
  Complex3 subdivided;  // R(S_R)
  CellularMap phi;      // R(S_R) -> S_R
  Complex3 seed_complex;
  CellularMap structure;  // seed complex -> S_R

  friend bool operator==(const Pair3D&, const Pair3D&) = default;
};

/// One ball per vertex symbol, one shared disk per edge symbol, an ideal
/// sphere region per ball and an ideal block per vertex symbol.
Complex3 build_base_complex(const CombRule& rule);

struct SubdividedComplex {
  Complex3 complex;
  CellularMap phi;
};

/// Child balls, interior disks, exterior disk records, subdisks with ideal
/// remainders and ideal complements, with the subdivision map into the base.
SubdividedComplex build_subdivided_complex(const CombRule& rule);

/// One ball per seed vertex with a disk per slot; disks of each seed edge
/// are identified, slots following assign_slots.
Complex3 build_seed_complex(const CombRule& rule);
CellularMap seed_structure_map(const Complex3& seed, const Complex3& base);

Pair3D build_pair(const CombRule& rule);

/// Balls as vertices (id = seed vertex id), identified disk pairs as edges.
LabeledGraph seed_dual_graph(const Complex3& seed);

struct CellCountReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// #Ball3 = #BoundaryDisk per symbol set, #SubDisk(e) = k_e,
/// #child balls of v = |interior(v)| and the subdisk/stub duality.
CellCountReport check_cell_counts(const CombRule& rule, const Pair3D& pair);

/// Levels obtained by repeatedly replacing each ball by its symbol's child
/// inventory in the subdivided complex. Throws std::invalid_argument if
/// depth < 1.
HistoryGraph history_from_cells(const Pair3D& pair, int depth);

struct RealizationReport {
  bool pass = false;
  int depth = 0;
  std::vector<std::pair<std::string, std::string>> level_certificates;  // (cells, rule)
  int first_failing_level = -1;
  std::string detail;

  std::string summary() const;
};

/// Compares history_from_cells with build_history level by level and checks
/// that the level witnesses commute with the predecessor maps. Throws
/// std::invalid_argument if depth < 2.
RealizationReport verify_realization(const CombRule& rule, int depth);

}  // namespace fsr

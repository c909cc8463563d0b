#pragma once

#include <string>
#include <vector>

#include "fsr/planar.hpp"
#include "fsr/rule.hpp"

namespace fsr::gallery {

// Combinatorial rules.
CombRule cycdb();      // cycle doubling
CombRule ident();      // identity on a 3-cycle
CombRule bary_dual();  // read off BARY on TETRA
CombRule quad_dual();  // read off QUAD on TOR9

// Planar rules.
SubdivisionRule2D identity_2d();
SubdivisionRule2D bary();
SubdivisionRule2D quad();
SubdivisionRule2D sier();

// Surfaces.
Surface2D tri1();
Surface2D tetra();
Surface2D tor9();

std::vector<std::string> rule_names();
std::vector<std::string> rule_2d_names();
std::vector<std::string> surface_names();

/// Lookup by upper-case name; throws std::invalid_argument on unknown names.
CombRule rule(const std::string& name);
SubdivisionRule2D rule_2d(const std::string& name);
Surface2D surface(const std::string& name);

}  // namespace fsr::gallery

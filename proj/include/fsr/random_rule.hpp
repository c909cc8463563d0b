#pragma once

#include <cstdint>
#include <stdexcept>

#include "fsr/rule.hpp"

namespace fsr {

struct RandomRuleBounds {
  int max_vertex_symbols = 2;
  int max_edge_symbols = 2;
  int max_signature_length = 3;
  int max_seed_vertices = 4;
  int max_children = 3;
  int max_edge_children = 3;
  // Whole-rule attempts before giving up.
  int retry_budget = 2000;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic random valid rule. Seeds and interiors are simple graphs and
/// the stubs of one slot always sit on distinct children, so no level of the
/// expansion ever has parallel edges.
CombRule random_rule(std::uint64_t seed, const RandomRuleBounds& bounds = {});

}  // namespace fsr

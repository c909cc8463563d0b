#pragma once

#include <stdexcept>
#include <string>

#include "fsr/axioms.hpp"
#include "fsr/rule.hpp"

namespace fsr {

class InferenceError : public std::runtime_error {
 public:
  InferenceError(const std::string& what, AxiomReport report = {})
      : std::runtime_error(what), report_(std::move(report)) {}
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

/// Reads a combinatorial rule off a history graph with at least three levels
/// (origin included) that passes check_axioms. Each symbol's rule comes from
/// its first occurrence below the top level; signatures are sorted; edge-rule
/// children are ordered by (symbol, edge id); stub slots come from the same
/// canonical slot assignment expand_level uses.
CombRule infer_rule(const HistoryGraph& h);

}  // namespace fsr

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fsr/history.hpp"
#include "fsr/planar.hpp"
#include "fsr/realizer.hpp"
#include "fsr/rule.hpp"

namespace fsr {

/// Syntax error with a 1-based line and column; an empty document reports
/// line 0, column 0.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  int line_, column_;
};

/// Rule documents. Stub slots and indices are printed one-based. Parsing
/// throws ParseError on syntax errors and ValidationError if the rule is
/// invalid.
std::string render_rule(const CombRule& rule);
CombRule parse_rule(const std::string& text);

/// History documents: level blocks with vertices, edges and predecessor
/// lines. Parsing keeps structural defects (missing or repeated
/// predecessors) for check_axioms to report.
std::string render_history(const HistoryGraph& h);
HistoryGraph parse_history(const std::string& text);

std::string render_rule_2d(const SubdivisionRule2D& rule);
SubdivisionRule2D parse_rule_2d(const std::string& text);
std::string render_surface(const Surface2D& x);
Surface2D parse_surface(const std::string& text);

std::string render_complex(const Complex3& c);

struct DotOptions {
  std::string graph_name = "history";
  bool edge_labels = true;
};

/// Nodes L{level}_{id} labeled by symbol, solid horizontal and dashed
/// vertical edges, in sorted order.
std::string export_dot(const HistoryGraph& h, const DotOptions& options = {});

struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  std::string str() const;
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

Ratio make_ratio(std::int64_t num, std::int64_t den);

struct LevelStats {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::map<std::size_t, std::size_t> degree_histogram;  // degree -> vertex count
};

struct StatsReport {
  std::vector<LevelStats> levels;
  std::vector<Ratio> growth;  // |level n+1| / |level n|

  std::string render() const;
};

StatsReport stats(const HistoryGraph& h);

}  // namespace fsr

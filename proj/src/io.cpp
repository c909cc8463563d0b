#include "fsr/io.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

namespace fsr {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  int column = 0;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

std::vector<Line> lex(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    Line line{number, {}};
    for (std::size_t i = 0; i < raw.size();) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      line.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

class Reader {
 public:
  Reader(const std::string& text, const std::string& header) : lines_(lex(text)) {
    if (lines_.empty()) throw ParseError("empty document", 0, 0);
    const Line& first = lines_.front();
    std::string want_version = "1";
    if (first.tokens[0].text != header) fail(first, 0, "expected header '" + header + " 1'");
    if (first.tokens.size() != 2 || first.tokens[1].text != want_version)
      fail(first, first.tokens.size() > 1 ? 1 : 0, "unsupported " + header + " version");
    pos_ = 1;
  }

  bool done() const { return pos_ >= lines_.size(); }
  const Line& next() { return lines_[pos_++]; }
  const Line& last() const { return lines_.back(); }

  [[noreturn]] static void fail(const Line& line, std::size_t token, const std::string& message) {
    int column = token < line.tokens.size() ? line.tokens[token].column : 1;
    throw ParseError(message, line.number, column);
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

void expect_size(const Line& line, std::size_t n, const std::string& form) {
  if (line.tokens.size() != n)
    Reader::fail(line, line.tokens.size() > n ? n : line.tokens.size() - 1, "expected '" + form + "'");
}

bool is_number(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

int parse_int(const Line& line, std::size_t token, int minimum = 0) {
  const std::string& s = line.tokens[token].text;
  bool negative = !s.empty() && s[0] == '-';
  std::string digits = negative ? s.substr(1) : s;
  if (!is_number(digits) || digits.size() > 9) Reader::fail(line, token, "expected an integer, got '" + s + "'");
  int v = std::stoi(s);
  if (v < minimum) Reader::fail(line, token, "value " + s + " is below " + std::to_string(minimum));
  return v;
}

Color parse_color(const Line& line, std::size_t token) {
  const std::string& s = line.tokens[token].text;
  if (s == "nonideal") return Color::NonIdeal;
  if (s == "ideal") return Color::Ideal;
  Reader::fail(line, token, "expected 'ideal' or 'nonideal', got '" + s + "'");
}

std::string color_name(Color c) { return c == Color::Ideal ? "ideal" : "nonideal"; }

// Identifier tokens of one block: numeric tokens keep their value, others
// are numbered after the largest numeric token in order of first use.
class Interner {
 public:
  void note(const std::string& s) {
    if (is_number(s)) {
      if (s.size() <= 9) max_ = std::max(max_, std::stoi(s));
    } else if (!seen_.count(s)) {
      seen_.insert(s);
      order_.push_back(s);
    }
  }
  void freeze() {
    int next = max_ + 1;
    for (const std::string& s : order_) ids_[s] = next++;
  }
  std::optional<int> find(const std::string& s) const {
    if (is_number(s)) return s.size() <= 9 ? std::optional<int>(std::stoi(s)) : std::nullopt;
    auto it = ids_.find(s);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

 private:
  int max_ = -1;
  std::set<std::string> seen_;
  std::vector<std::string> order_;
  std::map<std::string, int> ids_;
};

// Lines of a block up to its 'end'.
std::vector<Line> read_block(Reader& r, const Line& opener) {
  std::vector<Line> body;
  while (!r.done()) {
    const Line& line = r.next();
    if (line.tokens[0].text == "end") {
      expect_size(line, 1, "end");
      return body;
    }
    body.push_back(line);
  }
  Reader::fail(opener, 0, "block '" + opener.tokens[0].text + "' has no 'end'");
}

struct GraphBlock {
  LabeledGraph graph;
  Interner vertex_ids;
  std::vector<Line> other;  // lines that are not vertex or edge lines
};

// Vertex and edge lines of a block. `*` marks a FREE end.
GraphBlock parse_graph(const std::vector<Line>& body) {
  GraphBlock out;
  Interner edge_ids;
  for (const Line& line : body) {
    const std::string& kind = line.tokens[0].text;
    if (kind == "vertex") {
      expect_size(line, 3, "vertex <id> <symbol>");
      out.vertex_ids.note(line.tokens[1].text);
    } else if (kind == "edge") {
      expect_size(line, 5, "edge <id> <symbol> <end> <end>");
      edge_ids.note(line.tokens[1].text);
    }
  }
  out.vertex_ids.freeze();
  edge_ids.freeze();
  auto end_of = [&](const Line& line, std::size_t t) {
    if (line.tokens[t].text == "*") return kFree;
    auto id = out.vertex_ids.find(line.tokens[t].text);
    if (!id || !out.graph.has_vertex(*id)) Reader::fail(line, t, "unknown vertex '" + line.tokens[t].text + "'");
    return *id;
  };
  for (const Line& line : body) {
    if (line.tokens[0].text != "vertex") continue;
    try {
      auto id = out.vertex_ids.find(line.tokens[1].text);
      if (!id) Reader::fail(line, 1, "bad vertex id");
      out.graph.add_vertex(*id, line.tokens[2].text);
    } catch (const StructuralError& e) {
      Reader::fail(line, 1, e.what());
    }
  }
  for (const Line& line : body) {
    const std::string& kind = line.tokens[0].text;
    try {
      if (kind == "vertex") {
        continue;
      } else if (kind == "edge") {
        auto id = edge_ids.find(line.tokens[1].text);
        if (!id) Reader::fail(line, 1, "bad edge id");
        out.graph.add_edge(*id, line.tokens[2].text, end_of(line, 3), end_of(line, 4));
      } else {
        out.other.push_back(line);
      }
    } catch (const StructuralError& e) {
      Reader::fail(line, 1, e.what());
    }
  }
  return out;
}

std::string end_name(VertexId v) { return v == kFree ? "*" : std::to_string(v); }

void render_graph(std::ostringstream& out, const LabeledGraph& g) {
  for (const Vertex& v : g.vertices()) out << "vertex " << v.id << ' ' << v.symbol << '\n';
  for (const Edge& e : g.edges())
    out << "edge " << e.id << ' ' << e.symbol << ' ' << end_name(e.a) << ' ' << end_name(e.b) << '\n';
}

std::vector<Symbol> symbols_after(const Line& line, std::size_t from) {
  std::vector<Symbol> out;
  for (std::size_t i = from; i < line.tokens.size(); ++i) out.push_back(line.tokens[i].text);
  return out;
}

// Symbols after a ':' separator at token `colon`.
std::vector<Symbol> list_after_colon(const Line& line, std::size_t colon, const std::string& form) {
  if (line.tokens.size() <= colon || line.tokens[colon].text != ":") Reader::fail(line, colon, "expected '" + form + "'");
  return symbols_after(line, colon + 1);
}

}  // namespace

std::string render_rule(const CombRule& rule) {
  std::ostringstream out;
  out << "fsr-rule 1\n";
  out << "origin " << rule.alphabet.origin_symbol << '\n';
  out << "vertex-symbols";
  for (const Symbol& s : rule.alphabet.vertex_symbols) out << ' ' << s;
  out << "\nedge-symbols";
  for (const Symbol& s : rule.alphabet.edge_symbols) out << ' ' << s;
  out << '\n';
  for (const auto& [v, sig] : rule.signatures) {
    out << "signature " << v << " :";
    for (const Symbol& e : sig) out << ' ' << e;
    out << '\n';
  }
  for (const auto& [v, vr] : rule.vertex_rules) {
    out << "vertex-rule " << v << '\n';
    render_graph(out, vr.interior);
    for (const Stub& s : vr.stubs) out << "stub " << s.child << ' ' << s.slot + 1 << ' ' << s.index + 1 << '\n';
    out << "end\n";
  }
  for (const auto& [e, er] : rule.edge_rules) {
    out << "edge-rule " << e << " :";
    for (const Symbol& c : er.children) out << ' ' << c;
    out << '\n';
  }
  out << "seed\n";
  render_graph(out, rule.seed);
  out << "end\n";
  return out.str();
}

CombRule parse_rule(const std::string& text) {
  Reader r(text, "fsr-rule");
  CombRule rule;
  bool have_seed = false, have_vertex_symbols = false, have_edge_symbols = false;
  while (!r.done()) {
    const Line& line = r.next();
    const std::string& kind = line.tokens[0].text;
    if (kind == "origin") {
      expect_size(line, 2, "origin <symbol>");
      rule.alphabet.origin_symbol = line.tokens[1].text;
    } else if (kind == "vertex-symbols" || kind == "edge-symbols") {
      bool vertex = kind == "vertex-symbols";
      if (vertex ? have_vertex_symbols : have_edge_symbols) Reader::fail(line, 0, "repeated " + kind);
      (vertex ? have_vertex_symbols : have_edge_symbols) = true;
      auto& set = vertex ? rule.alphabet.vertex_symbols : rule.alphabet.edge_symbols;
      for (std::size_t i = 1; i < line.tokens.size(); ++i)
        if (!set.insert(line.tokens[i].text).second) Reader::fail(line, i, "repeated symbol " + line.tokens[i].text);
    } else if (kind == "signature") {
      auto sig = list_after_colon(line, 2, "signature <vertex-symbol> : <edge-symbol>...");
      if (!rule.signatures.emplace(line.tokens[1].text, sig).second)
        Reader::fail(line, 1, "repeated signature for " + line.tokens[1].text);
    } else if (kind == "edge-rule") {
      auto children = list_after_colon(line, 2, "edge-rule <edge-symbol> : <edge-symbol>...");
      if (!rule.edge_rules.emplace(line.tokens[1].text, EdgeRule{line.tokens[1].text, children}).second)
        Reader::fail(line, 1, "repeated edge rule for " + line.tokens[1].text);
    } else if (kind == "vertex-rule") {
      expect_size(line, 2, "vertex-rule <vertex-symbol>");
      const Symbol& v = line.tokens[1].text;
      if (rule.vertex_rules.count(v)) Reader::fail(line, 1, "repeated vertex rule for " + v);
      GraphBlock block = parse_graph(read_block(r, line));
      VertexRule vr{v, std::move(block.graph), {}};
      for (const Line& s : block.other) {
        if (s.tokens[0].text != "stub") Reader::fail(s, 0, "unexpected '" + s.tokens[0].text + "' in vertex rule");
        expect_size(s, 4, "stub <child> <slot> <index>");
        auto child = block.vertex_ids.find(s.tokens[1].text);
        if (!child) Reader::fail(s, 1, "unknown child '" + s.tokens[1].text + "'");
        vr.stubs.push_back({*child, parse_int(s, 2, 1) - 1, parse_int(s, 3, 1) - 1});
      }
      rule.vertex_rules.emplace(v, std::move(vr));
    } else if (kind == "seed") {
      expect_size(line, 1, "seed");
      if (have_seed) Reader::fail(line, 0, "repeated seed");
      have_seed = true;
      GraphBlock block = parse_graph(read_block(r, line));
      if (!block.other.empty()) Reader::fail(block.other.front(), 0, "unexpected line in seed");
      rule.seed = std::move(block.graph);
    } else {
      Reader::fail(line, 0, "unknown directive '" + kind + "'");
    }
  }
  if (!have_seed) Reader::fail(r.last(), 0, "document has no seed block");
  ValidationReport report = validate_rule(rule);
  if (!report.ok()) throw ValidationError(report);
  return rule;
}

std::string render_history(const HistoryGraph& h) {
  std::ostringstream out;
  out << "fsr-history 1\n";
  out << "origin " << h.origin_symbol << '\n';
  for (std::size_t n = 1; n < h.levels.size(); ++n) {
    out << "level " << n << '\n';
    render_graph(out, h.levels[n]);
    if (n < h.vertical.size())
      for (const VerticalEdge& e : h.vertical[n]) out << "pred " << e.child << ' ' << e.parent << '\n';
    out << "end\n";
  }
  return out.str();
}

HistoryGraph parse_history(const std::string& text) {
  Reader r(text, "fsr-history");
  HistoryGraph h;
  h.levels.emplace_back();
  h.vertical.emplace_back();
  Interner previous;
  previous.freeze();
  bool have_origin = false;
  while (!r.done()) {
    const Line& line = r.next();
    const std::string& kind = line.tokens[0].text;
    if (kind == "origin") {
      expect_size(line, 2, "origin <symbol>");
      if (have_origin || h.levels.size() > 1) Reader::fail(line, 0, "origin must come once, before the levels");
      have_origin = true;
      h.origin_symbol = line.tokens[1].text;
    } else if (kind == "level") {
      expect_size(line, 2, "level <n>");
      int n = parse_int(line, 1, 1);
      if (n != static_cast<int>(h.levels.size()))
        Reader::fail(line, 1, "expected level " + std::to_string(h.levels.size()));
      GraphBlock block = parse_graph(read_block(r, line));
      std::vector<VerticalEdge> up;
      for (const Line& p : block.other) {
        if (p.tokens[0].text != "pred") Reader::fail(p, 0, "unexpected '" + p.tokens[0].text + "' in level");
        expect_size(p, 3, "pred <vertex> <parent>");
        auto child = block.vertex_ids.find(p.tokens[1].text);
        if (!child) Reader::fail(p, 1, "unknown vertex '" + p.tokens[1].text + "'");
        auto parent = n == 1 ? std::optional<int>(parse_int(p, 2)) : previous.find(p.tokens[2].text);
        if (!parent) Reader::fail(p, 2, "unknown parent '" + p.tokens[2].text + "'");
        up.push_back({*child, *parent});
      }
      h.levels.push_back(std::move(block.graph));
      h.vertical.push_back(std::move(up));
      previous = std::move(block.vertex_ids);
    } else {
      Reader::fail(line, 0, "unknown directive '" + kind + "'");
    }
  }
  h.levels[0].add_vertex(0, h.origin_symbol);
  return h;
}

std::string render_rule_2d(const SubdivisionRule2D& rule) {
  std::ostringstream out;
  out << "fsr-rule2d 1\n";
  if (!rule.name.empty()) out << "name " << rule.name << '\n';
  for (const auto& [id, e] : rule.edge_types) {
    out << "edge-type " << id << ' ' << color_name(e.color) << " :";
    for (const auto& c : e.children) out << ' ' << c;
    out << '\n';
  }
  for (const auto& [id, t] : rule.tile_types) {
    out << "tile-type " << id << ' ' << color_name(t.color) << " :";
    for (const TileSide& s : t.sides) out << ' ' << (s.reversed ? "~" : "") << s.edge_type;
    out << '\n';
    for (const Subtile& s : t.layout.subtiles) out << "subtile " << s.id << ' ' << s.type << '\n';
    for (const SubtileGluing& g : t.layout.gluings)
      out << "glue " << g.sub_a << ' ' << g.side_a << ' ' << g.sub_b << ' ' << g.side_b << ' ' << g.edge_type << '\n';
    for (const BoundarySlot& b : t.layout.boundary)
      out << "boundary " << b.subtile << ' ' << b.side << ' ' << b.parent_side << ' ' << b.child_index << '\n';
    out << "end\n";
  }
  return out.str();
}

SubdivisionRule2D parse_rule_2d(const std::string& text) {
  Reader r(text, "fsr-rule2d");
  SubdivisionRule2D rule;
  while (!r.done()) {
    const Line& line = r.next();
    const std::string& kind = line.tokens[0].text;
    if (kind == "name") {
      expect_size(line, 2, "name <name>");
      rule.name = line.tokens[1].text;
    } else if (kind == "edge-type") {
      if (line.tokens.size() < 4) Reader::fail(line, 0, "expected 'edge-type <id> <colour> : <child>...'");
      EdgeType2D e{line.tokens[1].text, list_after_colon(line, 3, "edge-type <id> <colour> : <child>..."),
                   parse_color(line, 2)};
      if (!rule.edge_types.emplace(e.id, e).second) Reader::fail(line, 1, "repeated edge type " + e.id);
    } else if (kind == "tile-type") {
      if (line.tokens.size() < 4) Reader::fail(line, 0, "expected 'tile-type <id> <colour> : <side>...'");
      TileType2D t;
      t.id = line.tokens[1].text;
      t.color = parse_color(line, 2);
      for (const Symbol& s : list_after_colon(line, 3, "tile-type <id> <colour> : <side>..."))
        t.sides.push_back(s.size() > 1 && s[0] == '~' ? TileSide{s.substr(1), true} : TileSide{s, false});
      for (const Line& b : read_block(r, line)) {
        const std::string& k = b.tokens[0].text;
        if (k == "subtile") {
          expect_size(b, 3, "subtile <id> <tile-type>");
          t.layout.subtiles.push_back({parse_int(b, 1), b.tokens[2].text});
        } else if (k == "glue") {
          expect_size(b, 6, "glue <subtile> <side> <subtile> <side> <edge-type>");
          t.layout.gluings.push_back({parse_int(b, 1), parse_int(b, 2), parse_int(b, 3), parse_int(b, 4), b.tokens[5].text});
        } else if (k == "boundary") {
          expect_size(b, 5, "boundary <subtile> <side> <parent-side> <child>");
          t.layout.boundary.push_back({parse_int(b, 1), parse_int(b, 2), parse_int(b, 3), parse_int(b, 4)});
        } else {
          Reader::fail(b, 0, "unexpected '" + k + "' in tile type");
        }
      }
      if (!rule.tile_types.emplace(t.id, t).second) Reader::fail(line, 1, "repeated tile type " + t.id);
    } else {
      Reader::fail(line, 0, "unknown directive '" + kind + "'");
    }
  }
  auto violations = validate_rule_2d(rule);
  if (!violations.empty()) {
    std::string msg = "invalid planar rule:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw StructuralError(msg);
  }
  return rule;
}

std::string render_surface(const Surface2D& x) {
  std::ostringstream out;
  out << "fsr-surface 1\n";
  if (!x.name.empty()) out << "name " << x.name << '\n';
  for (const Tile& t : x.tiles) out << "tile " << t.id << ' ' << t.type << ' ' << color_name(t.color) << '\n';
  for (const SideGluing& g : x.gluings)
    out << "glue " << g.tile_a << ' ' << g.side_a << ' ' << g.tile_b << ' ' << g.side_b << ' ' << g.edge_type << ' '
        << (g.reversed ? "reversed" : "direct") << '\n';
  return out.str();
}

Surface2D parse_surface(const std::string& text) {
  Reader r(text, "fsr-surface");
  Surface2D x;
  while (!r.done()) {
    const Line& line = r.next();
    const std::string& kind = line.tokens[0].text;
    if (kind == "name") {
      expect_size(line, 2, "name <name>");
      x.name = line.tokens[1].text;
    } else if (kind == "tile") {
      expect_size(line, 4, "tile <id> <tile-type> <colour>");
      x.tiles.push_back({parse_int(line, 1), line.tokens[2].text, parse_color(line, 3)});
    } else if (kind == "glue") {
      expect_size(line, 7, "glue <tile> <side> <tile> <side> <edge-type> reversed|direct");
      const std::string& o = line.tokens[6].text;
      if (o != "reversed" && o != "direct") Reader::fail(line, 6, "expected 'reversed' or 'direct'");
      x.gluings.push_back({parse_int(line, 1), parse_int(line, 2), parse_int(line, 3), parse_int(line, 4),
                           o == "reversed", line.tokens[5].text});
    } else {
      Reader::fail(line, 0, "unknown directive '" + kind + "'");
    }
  }
  return x;
}

std::string render_complex(const Complex3& c) {
  std::ostringstream out;
  auto opt = [](int v) { return v < 0 ? std::string("-") : std::to_string(v); };
  out << "fsr-complex 1\n";
  out << "name " << c.name << '\n';
  for (const Cell3& cell : c.cells)
    out << "cell " << cell.id << ' ' << to_string(cell.kind) << ' ' << cell.symbol << ' ' << opt(cell.index) << ' '
        << (cell.host.empty() ? "-" : cell.host) << '\n';
  for (const Incidence& i : c.incidences)
    out << "incidence " << i.ball << ' ' << i.disk << ' ' << opt(i.slot < 0 ? -1 : i.slot + 1) << ' '
        << opt(i.parent_slot < 0 ? -1 : i.parent_slot + 1) << '\n';
  for (const Identification& i : c.identifications)
    out << "identify " << i.a << ' ' << i.b << ' ' << (i.reversed ? "reversed" : "direct") << '\n';
  for (const Attachment& a : c.attachments) out << "attach " << a.cell << ' ' << a.target << ' ' << a.role << '\n';
  return out.str();
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string node(std::size_t level, VertexId id) { return "L" + std::to_string(level) + "_" + std::to_string(id); }

}  // namespace

std::string export_dot(const HistoryGraph& h, const DotOptions& options) {
  std::ostringstream out;
  out << "graph " << quoted(options.graph_name) << " {\n";
  out << "  node [shape=circle];\n";
  for (std::size_t n = 0; n < h.levels.size(); ++n)
    for (const Vertex& v : h.levels[n].vertices()) out << "  " << node(n, v.id) << " [label=" << quoted(v.symbol) << "];\n";
  for (std::size_t n = 0; n < h.levels.size(); ++n)
    for (const Edge& e : h.levels[n].edges()) {
      auto end = [&](VertexId v, char side) {
        if (v != kFree) return node(n, v);
        std::string free = "L" + std::to_string(n) + "_free" + std::to_string(e.id) + side;
        out << "  " << free << " [shape=point];\n";
        return free;
      };
      std::string a = end(e.a, 'a'), b = end(e.b, 'b');
      out << "  " << a << " -- " << b;
      if (options.edge_labels) out << " [label=" << quoted(e.symbol) << "]";
      out << ";\n";
    }
  for (std::size_t n = 1; n < h.vertical.size(); ++n) {
    std::vector<VerticalEdge> up = h.vertical[n];
    std::sort(up.begin(), up.end(), [](const VerticalEdge& x, const VerticalEdge& y) {
      return std::tie(x.child, x.parent) < std::tie(y.child, y.parent);
    });
    for (const VerticalEdge& e : up) out << "  " << node(n, e.child) << " -- " << node(n - 1, e.parent) << " [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

Ratio make_ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  return {num / g, den / g};
}

std::string Ratio::str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

StatsReport stats(const HistoryGraph& h) {
  StatsReport r;
  for (const LabeledGraph& level : h.levels) {
    LevelStats s;
    s.vertices = level.vertex_count();
    s.edges = level.edge_count();
    std::map<VertexId, std::size_t> degree;
    for (const Vertex& v : level.vertices()) degree[v.id] = 0;
    for (const Edge& e : level.edges()) {
      if (e.a != kFree) ++degree[e.a];
      if (e.b != kFree) ++degree[e.b];
    }
    for (const auto& [v, d] : degree) ++s.degree_histogram[d];
    r.levels.push_back(std::move(s));
  }
  for (std::size_t n = 0; n + 1 < r.levels.size(); ++n)
    if (r.levels[n].vertices > 0)
      r.growth.push_back(make_ratio(static_cast<std::int64_t>(r.levels[n + 1].vertices),
                                    static_cast<std::int64_t>(r.levels[n].vertices)));
  return r;
}

std::string StatsReport::render() const {
  std::ostringstream out;
  for (std::size_t n = 0; n < levels.size(); ++n) {
    const LevelStats& s = levels[n];
    out << "level " << n << ": " << s.vertices << " vertices, " << s.edges << " edges, degrees";
    for (const auto& [d, k] : s.degree_histogram) out << ' ' << d << 'x' << k;
    out << '\n';
  }
  out << "growth:";
  for (const Ratio& q : growth) out << ' ' << q.str();
  out << '\n';
  return out.str();
}

}  // namespace fsr

#include "fsr/axioms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "fsr/canon.hpp"

namespace fsr {

std::string LevelRef::describe() const {
  return std::string(kind == Kind::Vertex ? "vertex" : "edge") + " L" + std::to_string(level) + ":" +
         std::to_string(id);
}

bool AxiomReport::ok() const {
  return std::all_of(status.begin(), status.end(), [](AxiomStatus s) { return s == AxiomStatus::Pass; });
}

std::string AxiomReport::summary() const {
  std::string out;
  for (int c = 0; c < 5; ++c) {
    out += "condition " + std::to_string(c + 1) + ": ";
    switch (status[c]) {
      case AxiomStatus::Pass: out += "pass"; break;
      case AxiomStatus::Skipped: out += "skipped"; break;
      case AxiomStatus::Fail: out += "FAIL"; break;
    }
    if (counterexample[c]) out += " (" + counterexample[c]->detail + ")";
    out += "\n";
  }
  return out;
}

namespace {

using IncidenceIndex = std::map<VertexId, std::vector<const Edge*>>;

IncidenceIndex index_incidence(const LabeledGraph& g) {
  IncidenceIndex idx;
  for (const Vertex& v : g.vertices()) idx[v.id];
  for (const Edge& e : g.edges()) {
    if (e.a != kFree) idx[e.a].push_back(&e);
    if (e.b != kFree) idx[e.b].push_back(&e);
  }
  return idx;
}

LabeledGraph star_of(const Vertex& v, const std::vector<const Edge*>& incident) {
  LabeledGraph star;
  star.add_vertex(v.id, v.symbol);
  for (const Edge* e : incident) star.add_edge(e->id, e->symbol, v.id, kFree);
  return star;
}

// Certificates of all horizontal open stars, per level.
std::vector<std::map<VertexId, std::string>> star_certificates(const HistoryGraph& h) {
  std::vector<std::map<VertexId, std::string>> out(h.levels.size());
  for (std::size_t n = 1; n < h.levels.size(); ++n) {
    IncidenceIndex idx = index_incidence(h.levels[n]);
    for (const Vertex& v : h.levels[n].vertices())
      out[n][v.id] = canonical_form(star_of(v, idx[v.id]));
  }
  return out;
}

struct PreimageCertificates {
  std::map<VertexId, std::string> vertex;
  std::map<EdgeId, std::string> edge;
  std::map<EdgeId, std::size_t> edge_vertex_count;
};

// Preimage certificates of level n, for 1 <= n < top.
std::vector<PreimageCertificates> preimage_certificates(const HistoryGraph& h) {
  std::vector<PreimageCertificates> out(h.levels.size());
  for (std::size_t n = 1; n + 1 < h.levels.size(); ++n) {
    PreimageFragments f = all_fragment_preimages(h.levels[n], h.levels[n + 1], h.predecessor(n + 1));
    for (auto& [v, g] : f.by_vertex) out[n].vertex[v] = canonical_form(g);
    for (auto& [e, g] : f.by_edge) {
      out[n].edge[e] = canonical_form(g);
      out[n].edge_vertex_count[e] = g.vertex_count();
    }
  }
  return out;
}

}  // namespace

AxiomReport check_axioms(const HistoryGraph& h) {
  AxiomReport report;
  auto fail = [&](int c, std::string detail, std::optional<LevelRef> a = {},
                  std::optional<LevelRef> b = {}) {
    if (report.status[c - 1] == AxiomStatus::Fail) return;
    report.status[c - 1] = AxiomStatus::Fail;
    report.counterexample[c - 1] = Counterexample{c, a, b, std::move(detail)};
  };
  auto vref = [](std::size_t level, int id) { return LevelRef{LevelRef::Kind::Vertex, level, id}; };
  auto eref = [](std::size_t level, int id) { return LevelRef{LevelRef::Kind::Edge, level, id}; };

  // (1)
  if (h.levels.empty()) {
    fail(1, "no levels");
  } else {
    const LabeledGraph& root = h.levels[0];
    if (root.vertex_count() != 1)
      fail(1, "level 0 has " + std::to_string(root.vertex_count()) + " vertices");
    else if (root.vertices()[0].symbol != h.origin_symbol)
      fail(1, "level 0 vertex has symbol " + root.vertices()[0].symbol + ", expected origin " +
                  h.origin_symbol);
    else if (root.edge_count() != 0)
      fail(1, "level 0 has horizontal edges");
  }

  // (2)
  if (h.vertical.size() != h.levels.size())
    fail(2, "vertical edge lists do not match the level count");
  if (!h.vertical.empty() && !h.vertical[0].empty()) fail(2, "origin level has upward edges");
  for (std::size_t n = 1; n < std::min(h.levels.size(), h.vertical.size()); ++n) {
    for (const VerticalEdge& e : h.vertical[n]) {
      if (!h.levels[n].has_vertex(e.child))
        fail(2, "vertical edge from missing vertex " + vref(n, e.child).describe(), vref(n, e.child));
      else if (!h.levels[n - 1].has_vertex(e.parent))
        fail(2, "vertical edge from " + vref(n, e.child).describe() + " to missing vertex " +
                    vref(n - 1, e.parent).describe(),
             vref(n, e.child), vref(n - 1, e.parent));
    }
  }
  for (std::size_t n = 0; n < h.levels.size(); ++n)
    for (const Edge& e : h.levels[n].edges())
      if (e.free_ends() != 0)
        fail(2, "horizontal " + eref(n, e.id).describe() + " has a FREE end", eref(n, e.id));

  // (3)
  for (std::size_t n = 1; n < std::min(h.levels.size(), h.vertical.size()); ++n) {
    std::map<VertexId, int> ups;
    for (const VerticalEdge& e : h.vertical[n]) ++ups[e.child];
    for (const Vertex& v : h.levels[n].vertices()) {
      int k = ups.count(v.id) ? ups[v.id] : 0;
      if (k != 1)
        fail(3, vref(n, v.id).describe() + " has " + std::to_string(k) + " predecessors", vref(n, v.id));
    }
  }

  // (4)
  {
    auto stars = star_certificates(h);
    std::map<Symbol, std::pair<LevelRef, std::string>> first;
    for (std::size_t n = 1; n < h.levels.size() && report.passes(4); ++n) {
      IncidenceIndex idx = index_incidence(h.levels[n]);
      for (const Vertex& v : h.levels[n].vertices()) {
        const std::string& cert = stars[n][v.id];
        auto [it, inserted] = first.try_emplace(v.symbol, vref(n, v.id), cert);
        if (inserted || it->second.second == cert) continue;
        const LevelRef& rep = it->second.first;
        std::size_t rep_degree = h.levels[rep.level].degree(rep.id);
        fail(4, "symbol " + v.symbol + ": " + rep.describe() + " star degree " +
                    std::to_string(rep_degree) + " vs " + vref(n, v.id).describe() + " star degree " +
                    std::to_string(idx[v.id].size()),
             rep, vref(n, v.id));
        break;
      }
    }
  }

  // (5)
  if (!report.passes(2) || !report.passes(3)) {
    report.status[4] = AxiomStatus::Skipped;
    return report;
  }
  try {
    auto pre = preimage_certificates(h);
    std::map<Symbol, std::pair<LevelRef, std::string>> first_v, first_e;
    for (std::size_t n = 1; n + 1 < h.levels.size() && report.passes(5); ++n) {
      for (const Vertex& v : h.levels[n].vertices()) {
        const std::string& cert = pre[n].vertex[v.id];
        auto [it, inserted] = first_v.try_emplace(v.symbol, vref(n, v.id), cert);
        if (!inserted && it->second.second != cert) {
          fail(5, "symbol " + v.symbol + ": star preimages of " + it->second.first.describe() +
                      " and " + vref(n, v.id).describe() + " differ",
               it->second.first, vref(n, v.id));
          break;
        }
      }
      if (!report.passes(5)) break;
      for (const Edge& e : h.levels[n].edges()) {
        const std::string& cert = pre[n].edge[e.id];
        auto [it, inserted] = first_e.try_emplace(e.symbol, eref(n, e.id), cert);
        if (!inserted && it->second.second != cert) {
          fail(5, "edge symbol " + e.symbol + ": edge preimages of " + it->second.first.describe() +
                      " and " + eref(n, e.id).describe() + " differ",
               it->second.first, eref(n, e.id));
          break;
        }
      }
    }
  } catch (const StructuralError& err) {
    fail(5, std::string("predecessor map is not a graph morphism: ") + err.what());
  }
  return report;
}

bool edge_preimages_vertex_free(const HistoryGraph& h) {
  for (std::size_t n = 1; n + 1 < h.levels.size(); ++n) {
    PreimageFragments f = all_fragment_preimages(h.levels[n], h.levels[n + 1], h.predecessor(n + 1));
    for (const auto& [e, g] : f.by_edge)
      if (g.vertex_count() != 0) return false;
  }
  return true;
}

namespace {

constexpr char kSep = '\x1f';
constexpr const char* kTop = "\x1e" "top";

// Maps item keys to class names. `base` is the unrefined symbol of each key;
// `context` is the key minus its preimage part, used to merge top-level keys.
struct ClassNamer {
  std::map<std::string, Symbol> base;
  std::map<std::string, std::string> context;
  std::set<std::string> top_keys;

  std::map<std::string, Symbol> resolve() const {
    std::map<std::string, std::string> canonical_key;
    std::map<std::string, std::set<std::string>> lower_by_context;
    for (const auto& [k, ctx] : context)
      if (!top_keys.count(k)) lower_by_context[ctx].insert(k);
    for (const auto& [k, ctx] : context) {
      canonical_key[k] = k;
      if (top_keys.count(k)) {
        auto it = lower_by_context.find(ctx);
        if (it != lower_by_context.end() && it->second.size() == 1) canonical_key[k] = *it->second.begin();
      }
    }
    std::map<Symbol, std::set<std::string>> classes;
    for (const auto& [k, ck] : canonical_key) classes[base.at(ck)].insert(ck);
    std::map<std::string, Symbol> name_of_class;
    for (const auto& [b, keys] : classes) {
      int rank = 0;
      for (const std::string& ck : keys)
        name_of_class[ck] = keys.size() == 1 ? b : b + "." + std::to_string(++rank);
    }
    std::map<std::string, Symbol> out;
    for (const auto& [k, ck] : canonical_key) out[k] = name_of_class.at(ck);
    return out;
  }
};

std::size_t distinct_vertex_symbols(const HistoryGraph& h) {
  std::set<Symbol> s;
  for (std::size_t n = 1; n < h.levels.size(); ++n)
    for (const Vertex& v : h.levels[n].vertices()) s.insert(v.symbol);
  return s.size();
}

std::size_t distinct_edge_symbols(const HistoryGraph& h) {
  std::set<Symbol> s;
  for (const LabeledGraph& level : h.levels)
    for (const Edge& e : level.edges()) s.insert(e.symbol);
  return s.size();
}

}  // namespace

RefinementResult refine_labels(const HistoryGraph& h) {
  RefinementResult result;
  result.graph = h;
  HistoryGraph& g = result.graph;
  const std::size_t top = g.depth();

  // Unrefined symbols, used as the stem of every refined name.
  std::vector<std::map<VertexId, Symbol>> vbase(g.levels.size());
  std::vector<std::map<EdgeId, Symbol>> ebase(g.levels.size());
  for (std::size_t n = 0; n < g.levels.size(); ++n) {
    for (const Vertex& v : g.levels[n].vertices()) vbase[n][v.id] = v.symbol;
    for (const Edge& e : g.levels[n].edges()) ebase[n][e.id] = e.symbol;
  }

  std::size_t vclasses = distinct_vertex_symbols(g);
  std::size_t eclasses = distinct_edge_symbols(g);
  const int limit = 64;
  for (int iter = 1; iter <= limit; ++iter) {
    result.iterations = iter;
    auto stars = star_certificates(g);
    std::vector<PreimageCertificates> pre;
    try {
      pre = preimage_certificates(g);
    } catch (const StructuralError&) {
      result.stabilized = false;
      break;
    }

    ClassNamer vn;
    std::vector<std::map<VertexId, std::string>> vkey(g.levels.size());
    for (std::size_t n = 1; n < g.levels.size(); ++n) {
      for (const Vertex& v : g.levels[n].vertices()) {
        std::string ctx = v.symbol + kSep + stars[n][v.id];
        std::string key = ctx + kSep + (n < top ? pre[n].vertex[v.id] : std::string(kTop));
        vkey[n][v.id] = key;
        vn.base[key] = vbase[n][v.id];
        vn.context[key] = ctx;
        if (n == top) vn.top_keys.insert(key);
      }
    }
    std::map<std::string, Symbol> vnames = vn.resolve();

    ClassNamer en;
    std::vector<std::map<EdgeId, std::string>> ekey(g.levels.size());
    for (std::size_t n = 1; n < g.levels.size(); ++n) {
      for (const Edge& e : g.levels[n].edges()) {
        Symbol sa = vnames.at(vkey[n].at(e.a)), sb = vnames.at(vkey[n].at(e.b));
        if (sb < sa) std::swap(sa, sb);
        std::string ctx = e.symbol + kSep + sa + kSep + sb;
        std::string key = ctx + kSep + (n < top ? pre[n].edge[e.id] : std::string(kTop));
        ekey[n][e.id] = key;
        en.base[key] = ebase[n][e.id];
        en.context[key] = ctx;
        if (n == top) en.top_keys.insert(key);
      }
    }
    std::map<std::string, Symbol> enames = en.resolve();

    for (std::size_t n = 1; n < g.levels.size(); ++n) {
      for (const auto& [v, key] : vkey[n]) g.levels[n].set_vertex_symbol(v, vnames.at(key));
      for (const auto& [e, key] : ekey[n]) g.levels[n].set_edge_symbol(e, enames.at(key));
    }
    std::size_t nv = distinct_vertex_symbols(g), ne = distinct_edge_symbols(g);
    bool stable = nv == vclasses && ne == eclasses;
    vclasses = nv;
    eclasses = ne;
    if (stable) {
      result.stabilized = true;
      break;
    }
  }
  result.vertex_classes = vclasses;
  result.edge_classes = eclasses;
  result.compatible = check_axioms(g).ok();
  return result;
}

}  // namespace fsr

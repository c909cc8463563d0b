#include "fsr/random_rule.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace fsr {

namespace {

// mt19937_64 output is fixed by the standard; reducing with % keeps the
// sequence identical on every platform, unlike the std distributions.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }
  template <typename T>
  const T& pick(const std::vector<T>& xs) { return xs[below(static_cast<int>(xs.size()))]; }
  template <typename T>
  void shuffle(std::vector<T>& xs) {
    for (int i = static_cast<int>(xs.size()) - 1; i > 0; --i) std::swap(xs[i], xs[below(i + 1)]);
  }

 private:
  std::mt19937_64 engine_;
};

using Demand = std::map<Symbol, int>;

Demand demand_of(const StarSignature& sig) {
  Demand d;
  for (const Symbol& s : sig) ++d[s];
  return d;
}

// Pairs up half-edges (owner ids) per symbol without self-loops or parallel
// edges. Returns (symbol, a, b) triples or nothing.
std::optional<std::vector<std::tuple<Symbol, int, int>>> pair_half_edges(
    Draw& draw, const std::map<Symbol, std::vector<int>>& half_edges,
    std::set<std::pair<int, int>> taken) {
  std::vector<std::tuple<Symbol, int, int>> out;
  for (const auto& [sym, owners] : half_edges) {
    if (owners.size() % 2 != 0) return std::nullopt;
    bool done = false;
    for (int attempt = 0; attempt < 40 && !done; ++attempt) {
      std::vector<int> xs = owners;
      draw.shuffle(xs);
      std::set<std::pair<int, int>> local = taken;
      std::vector<std::tuple<Symbol, int, int>> pairs;
      bool ok = true;
      for (std::size_t i = 0; i + 1 < xs.size() && ok; i += 2) {
        auto key = std::minmax(xs[i], xs[i + 1]);
        if (xs[i] == xs[i + 1] || local.count(key)) ok = false;
        local.insert(key);
        pairs.push_back({sym, xs[i], xs[i + 1]});
      }
      if (!ok) continue;
      taken = std::move(local);
      out.insert(out.end(), pairs.begin(), pairs.end());
      done = true;
    }
    if (!done) return std::nullopt;
  }
  return out;
}

struct Child {
  Symbol symbol;
  Demand remaining;
  std::set<int> slots;
};

std::optional<VertexRule> random_vertex_rule(Draw& draw, const Symbol& v, const CombRule& rule,
                                             const RandomRuleBounds& bounds) {
  const StarSignature& sig = rule.signatures.at(v);
  std::vector<Symbol> vsyms(rule.alphabet.vertex_symbols.begin(), rule.alphabet.vertex_symbols.end());
  auto holders_of = [&](const Symbol& f) {
    std::vector<Symbol> out;
    for (const Symbol& w : vsyms)
      if (demand_of(rule.signatures.at(w)).count(f)) out.push_back(w);
    return out;
  };

  struct Item {
    int slot, index;
    Symbol symbol;
  };
  std::vector<Item> items;
  for (int i = 0; i < static_cast<int>(sig.size()); ++i) {
    const auto& children = rule.edge_rules.at(sig[i]).children;
    for (int j = 0; j < static_cast<int>(children.size()); ++j) items.push_back({i, j, children[j]});
  }
  draw.shuffle(items);

  std::vector<Child> children;
  VertexRule vr;
  vr.parent = v;
  auto new_child = [&](const Symbol& w) {
    children.push_back({w, demand_of(rule.signatures.at(w)), {}});
    return static_cast<int>(children.size()) - 1;
  };

  for (const Item& item : items) {
    std::vector<int> cands;
    for (int c = 0; c < static_cast<int>(children.size()); ++c)
      if (children[c].remaining[item.symbol] > 0 && !children[c].slots.count(item.slot)) cands.push_back(c);
    int chosen;
    bool full = static_cast<int>(children.size()) >= bounds.max_children;
    if (!cands.empty() && (full || draw.below(3) != 0)) {
      chosen = draw.pick(cands);
    } else if (!full) {
      auto holders = holders_of(item.symbol);
      if (holders.empty()) return std::nullopt;
      chosen = new_child(draw.pick(holders));
    } else {
      return std::nullopt;
    }
    --children[chosen].remaining[item.symbol];
    children[chosen].slots.insert(item.slot);
    vr.stubs.push_back({chosen, item.slot, item.index});
  }
  if (children.empty()) new_child(draw.pick(vsyms));

  // Fix parity of leftover half-edges by adding children where possible.
  for (int guard = 0; guard < 4; ++guard) {
    std::map<Symbol, int> total;
    for (const Child& c : children)
      for (const auto& [s, k] : c.remaining) total[s] += k;
    std::vector<Symbol> odd;
    for (const auto& [s, k] : total)
      if (k % 2) odd.push_back(s);
    if (odd.empty()) break;
    if (static_cast<int>(children.size()) >= bounds.max_children) return std::nullopt;
    auto holders = holders_of(odd.front());
    if (holders.empty()) return std::nullopt;
    new_child(draw.pick(holders));
  }

  std::map<Symbol, std::vector<int>> half_edges;
  for (int c = 0; c < static_cast<int>(children.size()); ++c)
    for (const auto& [s, k] : children[c].remaining)
      for (int i = 0; i < k; ++i) half_edges[s].push_back(c);
  auto pairs = pair_half_edges(draw, half_edges, {});
  if (!pairs) return std::nullopt;

  for (int c = 0; c < static_cast<int>(children.size()); ++c) vr.interior.add_vertex(c, children[c].symbol);
  for (const auto& [s, a, b] : *pairs) vr.interior.add_edge(s, a, b);
  std::sort(vr.stubs.begin(), vr.stubs.end(), [](const Stub& x, const Stub& y) {
    return std::tie(x.slot, x.index) < std::tie(y.slot, y.index);
  });
  return vr;
}

std::optional<LabeledGraph> random_seed(Draw& draw, const CombRule& rule, const RandomRuleBounds& bounds) {
  std::vector<Symbol> vsyms(rule.alphabet.vertex_symbols.begin(), rule.alphabet.vertex_symbols.end());
  int count = 1 + draw.below(bounds.max_seed_vertices);
  LabeledGraph seed;
  std::map<Symbol, std::vector<int>> half_edges;
  for (int i = 0; i < count; ++i) {
    const Symbol& s = draw.pick(vsyms);
    seed.add_vertex(i, s);
    for (const Symbol& e : rule.signatures.at(s)) half_edges[e].push_back(i);
  }
  auto pairs = pair_half_edges(draw, half_edges, {});
  if (!pairs) return std::nullopt;
  for (const auto& [s, a, b] : *pairs) seed.add_edge(s, a, b);
  return seed;
}

}  // namespace

CombRule random_rule(std::uint64_t seed, const RandomRuleBounds& bounds) {
  if (bounds.max_vertex_symbols < 1 || bounds.max_edge_symbols < 1 || bounds.max_signature_length < 1 ||
      bounds.max_seed_vertices < 1 || bounds.max_children < 1 || bounds.max_edge_children < 0 ||
      bounds.retry_budget < 1)
    throw GenerationError("random rule bounds must be positive");

  Draw draw(seed);
  static const std::vector<Symbol> kVertexNames{"a", "b", "c", "d", "f", "g"};
  static const std::vector<Symbol> kEdgeNames{"h", "k", "m", "n", "p", "q"};

  for (int attempt = 0; attempt < bounds.retry_budget; ++attempt) {
    CombRule rule;
    int nv = 1 + draw.below(std::min<int>(bounds.max_vertex_symbols, kVertexNames.size()));
    int ne = 1 + draw.below(std::min<int>(bounds.max_edge_symbols, kEdgeNames.size()));
    std::vector<Symbol> esyms(kEdgeNames.begin(), kEdgeNames.begin() + ne);
    for (int i = 0; i < nv; ++i) rule.alphabet.vertex_symbols.insert(kVertexNames[i]);
    rule.alphabet.edge_symbols.insert(esyms.begin(), esyms.end());

    for (const Symbol& v : rule.alphabet.vertex_symbols) {
      StarSignature sig;
      int len = 1 + draw.below(bounds.max_signature_length);
      for (int i = 0; i < len; ++i) sig.push_back(draw.pick(esyms));
      rule.signatures[v] = std::move(sig);
    }
    for (const Symbol& e : esyms) {
      EdgeRule er{e, {}};
      int k = draw.below(bounds.max_edge_children + 1);
      for (int j = 0; j < k; ++j) er.children.push_back(draw.pick(esyms));
      rule.edge_rules[e] = std::move(er);
    }
    bool ok = true;
    for (const Symbol& v : rule.alphabet.vertex_symbols) {
      std::optional<VertexRule> vr;
      for (int inner = 0; inner < 20 && !vr; ++inner) vr = random_vertex_rule(draw, v, rule, bounds);
      if (!vr) {
        ok = false;
        break;
      }
      rule.vertex_rules[v] = std::move(*vr);
    }
    if (!ok) continue;
    std::optional<LabeledGraph> s;
    for (int inner = 0; inner < 20 && !s; ++inner) s = random_seed(draw, rule, bounds);
    if (!s) continue;
    rule.seed = std::move(*s);
    if (validate_rule(rule).ok()) return rule;
  }
  throw GenerationError("no valid rule within the retry budget for seed " + std::to_string(seed));
}

}  // namespace fsr

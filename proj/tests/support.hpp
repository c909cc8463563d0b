#pragma once

// Shared fixtures: random labeled multigraphs and a brute-force isomorphism
// search used as the reference for the canonical labeling.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "fsr/graph.hpp"

namespace fsr::testing {

inline LabeledGraph random_multigraph(std::mt19937_64& rng, int max_vertices = 8, bool free_ends = true) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  int n = nv(rng);
  const char* vsyms[] = {"a", "b", "c"};
  const char* esyms[] = {"x", "y"};
  std::uniform_int_distribution<int> vs(0, 2), es(0, 1), pick(0, n - 1), coin(0, 9);
  LabeledGraph g;
  int vsym_count = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < n; ++i) g.add_vertex(i, vsyms[vs(rng) % vsym_count]);
  int m = static_cast<int>(rng() % (2 * n + 2));
  for (int e = 0; e < m; ++e) {
    int a = pick(rng), b = pick(rng);
    if (free_ends && coin(rng) == 0) b = kFree;
    else if (a == b) continue;
    g.add_edge(g.edges().empty() ? 0 : g.edges().back().id + 1, esyms[es(rng)], a, b);
  }
  return g;
}

/// Copy of g with vertex and edge ids shuffled and shifted.
inline LabeledGraph relabeled(const LabeledGraph& g, std::mt19937_64& rng, int offset = 100) {
  std::vector<int> vperm(g.vertex_count()), eperm(g.edge_count());
  std::iota(vperm.begin(), vperm.end(), 0);
  std::iota(eperm.begin(), eperm.end(), 0);
  std::shuffle(vperm.begin(), vperm.end(), rng);
  std::shuffle(eperm.begin(), eperm.end(), rng);
  std::map<VertexId, VertexId> vmap;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) vmap[g.vertices()[i].id] = offset + vperm[i] * 3;
  LabeledGraph h;
  for (const Vertex& v : g.vertices()) h.add_vertex(vmap[v.id], v.symbol);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    VertexId a = e.a == kFree ? kFree : vmap[e.a];
    VertexId b = e.b == kFree ? kFree : vmap[e.b];
    if (rng() % 2) std::swap(a, b);
    h.add_edge(offset + eperm[i] * 2, e.symbol, a, b);
  }
  return h;
}

inline std::vector<std::tuple<Symbol, VertexId, VertexId>> edge_multiset(
    const LabeledGraph& g, const std::map<VertexId, VertexId>& map) {
  std::vector<std::tuple<Symbol, VertexId, VertexId>> out;
  for (const Edge& e : g.edges()) {
    VertexId a = e.a == kFree ? kFree : map.at(e.a);
    VertexId b = e.b == kFree ? kFree : map.at(e.b);
    out.emplace_back(e.symbol, std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Lexicographically least vertex bijection g -> h (images listed in g's id
/// order) preserving labels and the edge multiset, found by enumerating
/// every permutation.
inline std::optional<std::map<VertexId, VertexId>> brute_force_isomorphism(const LabeledGraph& g,
                                                                          const LabeledGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  std::vector<VertexId> targets;
  for (const Vertex& v : h.vertices()) targets.push_back(v.id);
  std::map<VertexId, VertexId> identity;
  for (const Vertex& v : h.vertices()) identity[v.id] = v.id;
  const auto want = edge_multiset(h, identity);
  do {
    bool labels = true;
    for (std::size_t i = 0; i < targets.size() && labels; ++i)
      labels = g.vertices()[i].symbol == h.vertex(targets[i]).symbol;
    if (!labels) continue;
    std::map<VertexId, VertexId> map;
    for (std::size_t i = 0; i < targets.size(); ++i) map[g.vertices()[i].id] = targets[i];
    if (edge_multiset(g, map) == want) return map;
  } while (std::next_permutation(targets.begin(), targets.end()));
  return std::nullopt;
}

/// Copy of g with one edge relabeled or moved to another endpoint, or with
/// one vertex relabeled when g has no edges. Often, but not always,
/// non-isomorphic to g.
inline LabeledGraph perturbed(const LabeledGraph& g, std::mt19937_64& rng) {
  LabeledGraph h;
  for (const Vertex& v : g.vertices()) h.add_vertex(v.id, v.symbol);
  if (g.edges().empty()) {
    const Vertex& v = g.vertices()[rng() % g.vertex_count()];
    h.set_vertex_symbol(v.id, v.symbol == "a" ? "b" : "a");
    return h;
  }
  std::size_t k = rng() % g.edge_count();
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    Edge e = g.edges()[i];
    if (i == k) {
      if (rng() % 2 || g.vertex_count() < 3) {
        e.symbol = e.symbol == "x" ? "y" : "x";
      } else {
        VertexId keep = e.a == kFree ? e.b : e.a;
        VertexId other = g.vertices()[rng() % g.vertex_count()].id;
        if (other != keep) e = Edge{e.id, e.symbol, keep, other};
      }
    }
    h.add_edge(e.id, e.symbol, e.a, e.b);
  }
  return h;
}

/// Pair number i of the seeded oracle corpus: relabeled copies, perturbed
/// copies and independent graphs in turn.
inline std::pair<LabeledGraph, LabeledGraph> oracle_pair(std::mt19937_64& rng, int i) {
  LabeledGraph g = random_multigraph(rng);
  switch (i % 3) {
    case 0:
      return {g, relabeled(g, rng)};
    case 1:
      return {g, relabeled(perturbed(g, rng), rng)};
    default: {
      LabeledGraph h = random_multigraph(rng);
      return {g, h};
    }
  }
}

}  // namespace fsr::testing

#include "fsr/canon.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <utility>

namespace fsr {

namespace {

// Graph data reduced to small integers. Symbols are numbered by their rank in
// the sorted symbol table, which is itself part of the certificate.
struct Prepared {
  int n = 0;
  std::vector<std::string> table;
  std::vector<int> colour;                           // vertex symbol rank
  std::vector<int> extra;                            // caller colours
  std::vector<std::vector<int>> stubs;               // sorted ranks of one-FREE edges
  std::vector<std::vector<std::pair<int, int>>> adj; // (neighbour index, edge rank)
  std::vector<int> loose;                            // ranks of edges with both ends FREE
};

Prepared prepare(const LabeledGraph& g, std::span<const int> extra) {
  Prepared p;
  std::set<std::string> symbols;
  for (const Vertex& v : g.vertices()) symbols.insert(v.symbol);
  for (const Edge& e : g.edges()) symbols.insert(e.symbol);
  p.table.assign(symbols.begin(), symbols.end());
  auto rank = [&](const std::string& s) {
    return static_cast<int>(std::lower_bound(p.table.begin(), p.table.end(), s) - p.table.begin());
  };

  p.n = static_cast<int>(g.vertex_count());
  p.colour.resize(p.n);
  p.extra.assign(p.n, 0);
  p.stubs.resize(p.n);
  p.adj.resize(p.n);
  for (int i = 0; i < p.n; ++i) p.colour[i] = rank(g.vertices()[i].symbol);
  if (!extra.empty()) {
    if (static_cast<int>(extra.size()) != p.n)
      throw StructuralError("extra colour count does not match vertex count");
    p.extra.assign(extra.begin(), extra.end());
  }
  for (const Edge& e : g.edges()) {
    int r = rank(e.symbol);
    if (e.free_ends() == 2) {
      p.loose.push_back(r);
    } else if (e.free_ends() == 1) {
      VertexId end = e.a == kFree ? e.b : e.a;
      p.stubs[g.vertex_index(end)].push_back(r);
    } else {
      int a = static_cast<int>(g.vertex_index(e.a));
      int b = static_cast<int>(g.vertex_index(e.b));
      p.adj[a].push_back({b, r});
      p.adj[b].push_back({a, r});
    }
  }
  for (auto& s : p.stubs) std::sort(s.begin(), s.end());
  std::sort(p.loose.begin(), p.loose.end());
  return p;
}

using Encoding = std::vector<int>;

// Refinement trace, compared on the fly against the trace of the best path
// at the same depth so that worse branches stop early.
class Trace {
 public:
  explicit Trace(const std::vector<int>* bound = nullptr) : bound_(bound) {}
  // False once the trace is known to exceed the bound.
  bool push(int x) {
    if (bound_ && cmp_ == 0) {
      std::size_t i = items_.size();
      if (i >= bound_->size() || x > (*bound_)[i]) {
        cmp_ = 1;
        return false;
      }
      if (x < (*bound_)[i]) cmp_ = -1;
    }
    items_.push_back(x);
    return true;
  }
  // -1, 0 or 1 against the bound; 0 without a bound.
  int finish() {
    if (bound_ && cmp_ == 0 && items_.size() < bound_->size()) cmp_ = -1;
    return cmp_;
  }
  std::vector<int>& items() { return items_; }

 private:
  const std::vector<int>* bound_;
  std::vector<int> items_;
  int cmp_ = 0;
};

// Canonical search restricted to one connected component.
class ComponentSearch {
 public:
  ComponentSearch(const Prepared& p, std::vector<int> members) : p_(p), members_(std::move(members)) {
    k_ = static_cast<int>(members_.size());
    std::vector<int> local(p_.n, -1);
    for (int i = 0; i < k_; ++i) local[members_[i]] = i;
    adj_.resize(k_);
    for (int i = 0; i < k_; ++i)
      for (auto [nb, r] : p_.adj[members_[i]]) adj_[i].push_back({local[nb], r});
  }

  void run() {
    Partition part = initial_partition();
    std::vector<int> all;
    for (int i = 0; i < k_; i = part.end[i]) all.push_back(i);
    Trace trace;
    refine(part, all, trace);
    best_traces_.push_back(std::move(trace.items()));
    std::vector<int> prefix;
    dfs(part, prefix);
  }

  const Encoding& encoding() const { return best_enc_; }
  std::vector<int> order() const {
    std::vector<int> out(k_);
    for (int i = 0; i < k_; ++i) out[i] = members_[best_perm_[i]];
    return out;
  }

 private:
  static constexpr int kNoJump = -1;

  // Ordered partition: lab lists vertices cell by cell; a cell is named by
  // its first position, cell[v] is the cell of v and end[c] is one past the
  // last position of cell c.
  struct Partition {
    std::vector<int> lab, cell, end;
    int cells = 0;
  };

  Partition initial_partition() const {
    std::vector<std::tuple<int, int, const std::vector<int>*>> keys(k_);
    for (int i = 0; i < k_; ++i) {
      int g = members_[i];
      keys[i] = {p_.extra[g], p_.colour[g], &p_.stubs[g]};
    }
    auto less = [&](int x, int y) {
      auto& [ex, cx, sx] = keys[x];
      auto& [ey, cy, sy] = keys[y];
      if (ex != ey) return ex < ey;
      if (cx != cy) return cx < cy;
      return *sx < *sy;
    };
    Partition part;
    part.lab.resize(k_);
    part.cell.resize(k_);
    part.end.resize(k_);
    std::iota(part.lab.begin(), part.lab.end(), 0);
    std::sort(part.lab.begin(), part.lab.end(), less);
    int c = 0;
    for (int i = 0; i < k_; ++i) {
      if (i > 0 && less(part.lab[i - 1], part.lab[i])) {
        part.end[c] = i;
        c = i;
        ++part.cells;
      }
      part.cell[part.lab[i]] = c;
    }
    if (k_ > 0) {
      part.end[c] = k_;
      ++part.cells;
    }
    return part;
  }

  // Refinement to the coarsest equitable partition below `part`, splitting
  // against the queued cells. Every step depends only on cell positions and
  // edge ranks, so the result commutes with vertex relabeling.
  // Returns false if the trace exceeded its bound and refinement stopped.
  bool refine(Partition& part, const std::vector<int>& splitters, Trace& trace) const {
    std::deque<int> queue(splitters.begin(), splitters.end());
    std::vector<char> queued(k_, 0);
    for (int s : splitters) queued[s] = 1;
    std::vector<std::pair<int, int>> hits;
    struct Hit {
      int vertex, from, to;  // key is hits[from, to)
    };
    std::vector<Hit> touched;
    while (!queue.empty() && part.cells < k_) {
      int w = queue.front();
      queue.pop_front();
      queued[w] = 0;
      hits.clear();
      for (int i = w; i < part.end[w]; ++i)
        for (auto [nb, r] : adj_[part.lab[i]]) hits.push_back({nb, r});
      if (hits.empty()) continue;
      std::sort(hits.begin(), hits.end());
      touched.clear();
      for (int i = 0, j; i < static_cast<int>(hits.size()); i = j) {
        j = i;
        while (j < static_cast<int>(hits.size()) && hits[j].first == hits[i].first) ++j;
        touched.push_back({hits[i].first, i, j});
      }
      auto key_less = [&](const Hit& x, const Hit& y) {
        return std::lexicographical_compare(
            hits.begin() + x.from, hits.begin() + x.to, hits.begin() + y.from, hits.begin() + y.to,
            [](const auto& a, const auto& b) { return a.second < b.second; });
      };
      std::sort(touched.begin(), touched.end(), [&](const Hit& x, const Hit& y) {
        int cx = part.cell[x.vertex], cy = part.cell[y.vertex];
        if (cx != cy) return cx < cy;
        return key_less(x, y);
      });
      for (std::size_t i = 0, j; i < touched.size(); i = j) {
        const int c = part.cell[touched[i].vertex];
        j = i;
        while (j < touched.size() && part.cell[touched[j].vertex] == c) ++j;
        const int e = part.end[c];
        const int untouched = (e - c) - static_cast<int>(j - i);
        bool uniform = untouched == 0 && !key_less(touched[i], touched[j - 1]);
        if (uniform || e - c == 1) continue;

        std::vector<int> rest;
        rest.reserve(untouched);
        {
          std::vector<int> mark;
          for (std::size_t t = i; t < j; ++t) mark.push_back(touched[t].vertex);
          std::sort(mark.begin(), mark.end());
          for (int p = c; p < e; ++p)
            if (!std::binary_search(mark.begin(), mark.end(), part.lab[p])) rest.push_back(part.lab[p]);
        }
        // Untouched vertices first, then touched ones by key.
        std::vector<std::pair<int, int>> pieces;  // (start, size)
        int p = c;
        for (int v : rest) {
          part.lab[p] = v;
          part.cell[v] = c;
          ++p;
        }
        if (!rest.empty()) pieces.push_back({c, static_cast<int>(rest.size())});
        for (std::size_t t = i; t < j;) {
          std::size_t u = t;
          int s = p;
          while (u < j && !key_less(touched[t], touched[u])) {
            part.lab[p] = touched[u].vertex;
            part.cell[touched[u].vertex] = s;
            ++p;
            ++u;
          }
          pieces.push_back({s, p - s});
          t = u;
        }
        for (auto [s, n] : pieces) part.end[s] = s + n;
        part.cells += static_cast<int>(pieces.size()) - 1;
        if (!trace.push(c) || !trace.push(static_cast<int>(pieces.size()))) return false;
        for (auto [s, n] : pieces)
          if (!trace.push(n)) return false;
        if (queued[c]) {
          for (auto [s, n] : pieces)
            if (!queued[s]) {
              queued[s] = 1;
              queue.push_back(s);
            }
        } else {
          std::size_t largest = 0;
          for (std::size_t q = 1; q < pieces.size(); ++q)
            if (pieces[q].second > pieces[largest].second) largest = q;
          for (std::size_t q = 0; q < pieces.size(); ++q)
            if (q != largest) {
              queued[pieces[q].first] = 1;
              queue.push_back(pieces[q].first);
            }
        }
      }
    }
    return true;
  }

  bool individualize(const Partition& from, int v, Partition& part, Trace& trace) const {
    part = from;
    const int c = part.cell[v], e = part.end[c];
    int at = c;
    while (part.lab[at] != v) ++at;
    std::swap(part.lab[c], part.lab[at]);
    part.end[c] = c + 1;
    part.end[c + 1] = e;
    for (int p = c + 1; p < e; ++p) part.cell[part.lab[p]] = c + 1;
    ++part.cells;
    return refine(part, {c}, trace);
  }

  Encoding encode(const std::vector<int>& perm) const {
    std::vector<int> pos(k_);
    for (int i = 0; i < k_; ++i) pos[perm[i]] = i;
    Encoding enc;
    enc.push_back(k_);
    for (int i = 0; i < k_; ++i) {
      int g = members_[perm[i]];
      enc.push_back(p_.extra[g]);
      enc.push_back(p_.colour[g]);
      enc.push_back(static_cast<int>(p_.stubs[g].size()));
      enc.insert(enc.end(), p_.stubs[g].begin(), p_.stubs[g].end());
    }
    std::vector<std::tuple<int, int, int>> triples;
    for (int v = 0; v < k_; ++v)
      for (auto [nb, r] : adj_[v])
        if (pos[nb] > pos[v]) triples.push_back({pos[v], pos[nb], r});
    std::sort(triples.begin(), triples.end());
    enc.push_back(static_cast<int>(triples.size()));
    for (auto [x, y, r] : triples) {
      enc.push_back(x);
      enc.push_back(y);
      enc.push_back(r);
    }
    return enc;
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> aut(k_);
    for (int i = 0; i < k_; ++i) aut[from[i]] = to[i];
    automorphisms_.push_back(std::move(aut));
  }

  // Orbit representative of each vertex under the automorphisms found so far
  // that fix every vertex of `prefix`.
  std::vector<int> orbits(const std::vector<int>& prefix) const {
    std::vector<int> parent(k_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& aut : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return aut[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < k_; ++v) {
        int a = find(v), b = find(aut[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < k_; ++v) parent[v] = find(v);
    return parent;
  }

  // Leaves are ordered by the sequence of refinement traces along their path,
  // then by encoding. Every explored node shares its trace prefix with the
  // best path, since a branch whose trace is larger is cut off and one whose
  // trace is smaller becomes the best path.
  int dfs(const Partition& part, std::vector<int>& prefix) {
    if (part.cells == k_) return leaf(part, prefix);
    const std::size_t depth = prefix.size() + 1;

    // Target: first cell of minimum size above one.
    int target = -1;
    for (int c = 0; c < k_; c = part.end[c]) {
      int size = part.end[c] - c;
      if (size > 1 && (target < 0 || size < part.end[target] - target)) target = c;
    }
    std::vector<int> candidates(part.lab.begin() + target, part.lab.begin() + part.end[target]);
    std::sort(candidates.begin(), candidates.end());

    std::vector<int> explored;
    std::size_t auts_seen = 0;
    std::vector<int> orbit;
    Partition child;
    for (int v : candidates) {
      if (!explored.empty() && !automorphisms_.empty()) {
        if (auts_seen != automorphisms_.size()) {
          orbit = orbits(prefix);
          auts_seen = automorphisms_.size();
        }
        bool redundant = std::any_of(explored.begin(), explored.end(),
                                     [&](int w) { return orbit[w] == orbit[v]; });
        if (redundant) continue;
      }
      explored.push_back(v);
      const bool bounded = best_traces_.size() > depth;
      Trace trace(bounded ? &best_traces_[depth] : nullptr);
      bool complete = individualize(part, v, child, trace);
      int cmp = trace.finish();
      if (!complete || cmp > 0) continue;
      if (!bounded || cmp < 0) {
        best_traces_.resize(depth);
        best_traces_.push_back(std::move(trace.items()));
        new_best_ = true;
      }
      prefix.push_back(v);
      int jump = dfs(child, prefix);
      prefix.pop_back();
      if (jump != kNoJump && jump < static_cast<int>(prefix.size())) return jump;
    }
    return kNoJump;
  }

  int leaf(const Partition& part, const std::vector<int>& prefix) {
    const std::vector<int>& perm = part.lab;
    Encoding enc = encode(perm);
    if (!have_first_) {
      have_first_ = true;
      new_best_ = false;
      first_enc_ = best_enc_ = std::move(enc);
      first_perm_ = best_perm_ = perm;
      first_path_ = prefix;
      return kNoJump;
    }
    if (enc == first_enc_) {
      record_automorphism(first_perm_, perm);
      // The subtree below the divergence point is an automorphic image of
      // one already explored along the first path.
      std::size_t common = 0;
      while (common < prefix.size() && common < first_path_.size() &&
             prefix[common] == first_path_[common])
        ++common;
      if (!new_best_) return static_cast<int>(common);
    }
    if (new_best_) {
      new_best_ = false;
      best_enc_ = std::move(enc);
      best_perm_ = perm;
      return kNoJump;
    }
    if (enc == best_enc_) {
      record_automorphism(best_perm_, perm);
      return kNoJump;
    }
    if (enc < best_enc_) {
      best_enc_ = std::move(enc);
      best_perm_ = perm;
    }
    return kNoJump;
  }

  const Prepared& p_;
  std::vector<int> members_;
  int k_ = 0;
  std::vector<std::vector<std::pair<int, int>>> adj_;

  bool have_first_ = false;
  bool new_best_ = false;
  std::vector<std::vector<int>> best_traces_;
  Encoding first_enc_, best_enc_;
  std::vector<int> first_perm_, best_perm_, first_path_;
  std::vector<std::vector<int>> automorphisms_;
};

std::vector<std::vector<int>> components(const Prepared& p) {
  std::vector<int> seen(p.n, 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < p.n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (auto [nb, r] : p.adj[comp[i]])
        if (!seen[nb]) {
          seen[nb] = 1;
          comp.push_back(nb);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

void append_ints(std::string& out, const std::vector<int>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
}

}  // namespace

std::map<VertexId, int> CanonicalLabeling::positions() const {
  std::map<VertexId, int> pos;
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  return pos;
}

CanonicalLabeling canonical_labeling(const LabeledGraph& g, std::span<const int> extra_colors) {
  CanonicalLabeling out;
  if (g.empty()) {
    out.certificate = std::string(kEmptyCertificate);
    return out;
  }
  Prepared p = prepare(g, extra_colors);

  std::vector<std::pair<Encoding, std::vector<int>>> parts;
  for (auto& comp : components(p)) {
    ComponentSearch search(p, std::move(comp));
    search.run();
    parts.push_back({search.encoding(), search.order()});
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });

  std::string& cert = out.certificate;
  cert = "fsr-cert/1;S";
  for (const std::string& s : p.table) cert += ":" + std::to_string(s.size()) + "=" + s;
  for (const auto& [enc, order] : parts) {
    cert += ";C";
    append_ints(cert, enc);
    for (int idx : order) out.order.push_back(g.vertices()[idx].id);
  }
  cert += ";F";
  append_ints(cert, p.loose);
  return out;
}

std::string canonical_form(const LabeledGraph& g) { return canonical_labeling(g).certificate; }

std::optional<LabeledIsomorphism> complete_edge_map(const LabeledGraph& g, const LabeledGraph& h,
                                                    const std::map<VertexId, VertexId>& vertices) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  using Key = std::tuple<Symbol, VertexId, VertexId>;
  auto key = [](const Symbol& s, VertexId a, VertexId b) {
    return Key{s, std::min(a, b), std::max(a, b)};
  };
  std::map<Key, std::vector<EdgeId>> buckets;
  for (auto it = h.edges().rbegin(); it != h.edges().rend(); ++it)
    buckets[key(it->symbol, it->a, it->b)].push_back(it->id);

  auto map_end = [&](VertexId v) -> std::optional<VertexId> {
    if (v == kFree) return kFree;
    auto it = vertices.find(v);
    if (it == vertices.end()) return std::nullopt;
    return it->second;
  };
  LabeledIsomorphism iso;
  iso.vertices = vertices;
  for (const Edge& e : g.edges()) {
    auto a = map_end(e.a), b = map_end(e.b);
    if (!a || !b) return std::nullopt;
    auto it = buckets.find(key(e.symbol, *a, *b));
    if (it == buckets.end() || it->second.empty()) return std::nullopt;
    iso.edges[e.id] = it->second.back();
    it->second.pop_back();
  }
  if (!is_isomorphism(g, h, iso)) return std::nullopt;
  return iso;
}

bool is_isomorphism(const LabeledGraph& g, const LabeledGraph& h, const LabeledIsomorphism& iso) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  if (iso.vertices.size() != g.vertex_count() || iso.edges.size() != g.edge_count()) return false;
  std::set<VertexId> vimg;
  for (const Vertex& v : g.vertices()) {
    auto it = iso.vertices.find(v.id);
    if (it == iso.vertices.end() || !h.has_vertex(it->second)) return false;
    if (h.vertex(it->second).symbol != v.symbol) return false;
    vimg.insert(it->second);
  }
  if (vimg.size() != g.vertex_count()) return false;
  std::set<EdgeId> eimg;
  auto map_end = [&](VertexId v) { return v == kFree ? kFree : iso.vertices.at(v); };
  for (const Edge& e : g.edges()) {
    auto it = iso.edges.find(e.id);
    if (it == iso.edges.end() || !h.has_edge(it->second)) return false;
    const Edge& f = h.edge(it->second);
    if (f.symbol != e.symbol) return false;
    VertexId a = map_end(e.a), b = map_end(e.b);
    if (!((f.a == a && f.b == b) || (f.a == b && f.b == a))) return false;
    eimg.insert(f.id);
  }
  return eimg.size() == g.edge_count();
}

std::optional<LabeledIsomorphism> canonical_isomorphism(const LabeledGraph& g,
                                                        const LabeledGraph& h) {
  CanonicalLabeling cg = canonical_labeling(g);
  CanonicalLabeling ch = canonical_labeling(h);
  if (cg.certificate != ch.certificate) return std::nullopt;
  std::map<VertexId, VertexId> vmap;
  for (std::size_t i = 0; i < cg.order.size(); ++i) vmap[cg.order[i]] = ch.order[i];
  return complete_edge_map(g, h, vmap);
}

std::optional<LabeledIsomorphism> are_isomorphic(const LabeledGraph& g, const LabeledGraph& h) {
  if (canonical_form(g) != canonical_form(h)) return std::nullopt;
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> eg(n, 0), eh(n, 0);
  std::vector<bool> used(n, false);
  std::map<VertexId, VertexId> vmap;
  // Greedy in id order: the smallest h-vertex whose individualization keeps
  // the two coloured graphs isomorphic always extends to a full witness.
  for (int i = 0; i < n; ++i) {
    eg[i] = i + 1;
    std::string target = canonical_labeling(g, eg).certificate;
    bool placed = false;
    for (int j = 0; j < n && !placed; ++j) {
      if (used[j] || h.vertices()[j].symbol != g.vertices()[i].symbol) continue;
      eh[j] = i + 1;
      if (canonical_labeling(h, eh).certificate == target) {
        used[j] = true;
        vmap[g.vertices()[i].id] = h.vertices()[j].id;
        placed = true;
      } else {
        eh[j] = 0;
      }
    }
    if (!placed) return std::nullopt;
  }
  return complete_edge_map(g, h, vmap);
}

}  // namespace fsr

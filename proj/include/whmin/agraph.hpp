#pragma once

// Dual A-graphs (Stallings graphs), folding, trimming, subgroup
// representations, basis extraction and canonical normal forms.

#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "whmin/words.hpp"

namespace whmin {

using VertexId = int;

// Edge-labeled directed graph closed under duality: storing the half-edge
// (x, a, y) implies (y, a^-1, x).  adj[x] lists every half-edge leaving x as
// (letter_index, target), so the entries of adj[x] are in bijection with the
// edges *into* x (their duals).  Unreduced graphs may carry parallel entries.
struct AGraph {
  int rank = 0;
  std::vector<std::vector<std::pair<int, VertexId>>> adj;

  AGraph() = default;
  AGraph(int r, int n) : rank(r), adj(n) {}

  int size() const { return static_cast<int>(adj.size()); }

  VertexId add_vertex() {
    adj.emplace_back();
    return size() - 1;
  }

  void add_edge(VertexId x, Letter a, VertexId y) {
    check_letter(a, rank);
    check_vertex(x);
    check_vertex(y);
    if (a < 0) {
      std::swap(x, y);
      a = -a;
    }
    adj[x].emplace_back(letter_index(a), y);
    adj[y].emplace_back(letter_index(-a), x);
  }

  void check_vertex(VertexId x) const {
    if (x < 0 || x >= size())
      throw std::invalid_argument("invalid vertex id " + std::to_string(x));
  }

  void sort_adjacency() {
    for (auto& v : adj) std::sort(v.begin(), v.end());
  }

  // Positive edges (x, a, y) with a in A, each listed once.
  std::vector<std::tuple<VertexId, Letter, VertexId>> positive_edges() const {
    std::vector<std::tuple<VertexId, Letter, VertexId>> out;
    for (VertexId x = 0; x < size(); ++x)
      for (auto [l, y] : adj[x])
        if (l % 2 == 0) out.emplace_back(x, letter_from_index(l), y);
    return out;
  }

  bool is_reduced() const {
    for (const auto& entries : adj) {
      std::vector<int> labels;
      labels.reserve(entries.size());
      for (auto [l, y] : entries) labels.push_back(l);
      std::sort(labels.begin(), labels.end());
      if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        return false;
    }
    return true;
  }

  bool is_cyclically_reduced() const {
    if (!is_reduced()) return false;
    for (const auto& entries : adj)
      if (entries.size() < 2) return false;
    return true;
  }

  friend bool operator==(const AGraph&, const AGraph&) = default;
};

// Labels of the edges into x (duals of the half-edges leaving x).
inline std::set<Letter> hyperlink(const AGraph& g, VertexId x) {
  g.check_vertex(x);
  std::set<Letter> out;
  for (auto [l, y] : g.adj[x]) out.insert(inverse(letter_from_index(l)));
  return out;
}

struct PointedAGraph {
  AGraph graph;
  VertexId base = 0;
  int size() const { return graph.size(); }
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Forces root `keep` to absorb root `drop`.
  void absorb(int keep, int drop) { parent[drop] = keep; }
};

}  // namespace detail

struct FoldResult {
  AGraph graph;
  std::vector<VertexId> vertex_map;  // old id -> new id
};

// Stallings folding: identify vertices until the graph is reduced.  Uses a
// union-find over vertices and a worklist of half-edges; confluence makes
// the result independent of processing order up to the returned relabeling.
inline FoldResult fold(const AGraph& g) {
  int n = g.size();
  detail::UnionFind uf(n);
  std::vector<std::map<int, VertexId>> out(n);
  std::queue<std::tuple<VertexId, int, VertexId>> pending;
  for (VertexId x = 0; x < n; ++x)
    for (auto [l, y] : g.adj[x]) pending.emplace(x, l, y);

  while (!pending.empty()) {
    auto [x, l, y] = pending.front();
    pending.pop();
    int rx = uf.find(x);
    auto it = out[rx].find(l);
    if (it == out[rx].end()) {
      out[rx][l] = y;
      continue;
    }
    int w = uf.find(it->second);
    int ry = uf.find(y);
    if (w == ry) continue;
    // conflict: merge the two targets, keeping the larger adjacency map
    int keep = w, drop = ry;
    if (out[keep].size() < out[drop].size()) std::swap(keep, drop);
    uf.absorb(keep, drop);
    for (auto [l2, t2] : out[drop]) pending.emplace(keep, l2, t2);
    out[drop].clear();
    pending.emplace(x, l, y);  // re-check the conflicting half-edge
  }

  std::vector<VertexId> new_id(n, -1);
  int m = 0;
  for (VertexId x = 0; x < n; ++x)
    if (uf.find(x) == x) new_id[x] = m++;

  AGraph res(g.rank, m);
  for (VertexId x = 0; x < n; ++x) {
    if (uf.find(x) != x) continue;
    for (auto [l, t] : out[x])
      res.adj[new_id[x]].emplace_back(l, new_id[uf.find(t)]);
  }
  res.sort_adjacency();

  std::vector<VertexId> vmap(n);
  for (VertexId x = 0; x < n; ++x) vmap[x] = new_id[uf.find(x)];
  return {std::move(res), std::move(vmap)};
}

// Per-vertex retraction data onto the cyclic core: beta is the core vertex
// reached from x, b the word labeling the shortest path there.  Vertices in
// the core have beta(x) = x and b(x) empty.  beta = -1 marks vertices of a
// fully trimmed component.
struct BranchInfo {
  std::vector<VertexId> beta;
  std::vector<Word> b;
};

struct CoreResult {
  AGraph core;
  BranchInfo branches;
  std::vector<VertexId> vertex_map;  // old id -> core id, -1 if trimmed
};

// Repeatedly trims endpoints (vertices with at most one incident edge).
// A graph that would trim to nothing keeps a single vertex by convention,
// so the trivial conjugacy class has size 1.
inline CoreResult cyclic_core(const AGraph& g) {
  if (!g.is_reduced()) throw std::invalid_argument("cyclic_core: graph not reduced");
  int n = g.size();
  std::vector<bool> alive(n, true);
  std::vector<int> deg(n);
  for (VertexId x = 0; x < n; ++x) deg[x] = static_cast<int>(g.adj[x].size());
  std::vector<VertexId> parent(n, -1);
  std::vector<Letter> plabel(n, 0);

  std::set<VertexId> endpoints;
  for (VertexId x = 0; x < n; ++x)
    if (deg[x] <= 1) endpoints.insert(x);

  int alive_count = n;
  while (!endpoints.empty() && alive_count > 1) {
    VertexId x = *endpoints.begin();
    endpoints.erase(endpoints.begin());
    if (!alive[x] || deg[x] > 1) continue;
    alive[x] = false;
    --alive_count;
    if (deg[x] == 1) {
      for (auto [l, y] : g.adj[x]) {
        if (!alive[y]) continue;
        parent[x] = y;
        plabel[x] = letter_from_index(l);
        if (--deg[y] <= 1) endpoints.insert(y);
        break;
      }
    }
  }

  std::vector<VertexId> new_id(n, -1);
  int m = 0;
  for (VertexId x = 0; x < n; ++x)
    if (alive[x]) new_id[x] = m++;

  AGraph core(g.rank, m);
  for (VertexId x = 0; x < n; ++x) {
    if (!alive[x]) continue;
    for (auto [l, y] : g.adj[x])
      if (alive[y]) core.adj[new_id[x]].emplace_back(l, new_id[y]);
  }
  core.sort_adjacency();

  BranchInfo br;
  br.beta.assign(n, -1);
  br.b.assign(n, Word{});
  for (VertexId x = 0; x < n; ++x) {
    std::vector<Letter> path;
    VertexId cur = x;
    while (cur != -1 && !alive[cur]) {
      path.push_back(plabel[cur]);
      cur = parent[cur];
    }
    if (cur != -1) {
      br.beta[x] = new_id[cur];
      br.b[x] = Word(std::move(path));
    }
  }
  return {std::move(core), std::move(br), std::move(new_id)};
}

// Trims endpoints but never removes `base`.  Step (c) of the action of an
// automorphism on a pointed graph.
inline PointedAGraph trim_except(const AGraph& g, VertexId base) {
  int n = g.size();
  std::vector<bool> alive(n, true);
  std::vector<int> deg(n);
  for (VertexId x = 0; x < n; ++x) deg[x] = static_cast<int>(g.adj[x].size());
  std::set<VertexId> endpoints;
  for (VertexId x = 0; x < n; ++x)
    if (deg[x] <= 1 && x != base) endpoints.insert(x);
  while (!endpoints.empty()) {
    VertexId x = *endpoints.begin();
    endpoints.erase(endpoints.begin());
    if (!alive[x] || deg[x] > 1) continue;
    alive[x] = false;
    for (auto [l, y] : g.adj[x]) {
      if (!alive[y]) continue;
      if (--deg[y] <= 1 && y != base) endpoints.insert(y);
      break;
    }
  }
  std::vector<VertexId> new_id(n, -1);
  int m = 0;
  for (VertexId x = 0; x < n; ++x)
    if (alive[x]) new_id[x] = m++;
  AGraph res(g.rank, m);
  for (VertexId x = 0; x < n; ++x) {
    if (!alive[x]) continue;
    for (auto [l, y] : g.adj[x])
      if (alive[y]) res.adj[new_id[x]].emplace_back(l, new_id[y]);
  }
  res.sort_adjacency();
  return {std::move(res), new_id[base]};
}

// Bouquet of loops at a common base vertex, one loop per generator.
// Empty generators are dropped.
inline PointedAGraph build_bouquet(const std::vector<Word>& gens, int rank) {
  AGraph g(rank, 1);
  for (const Word& w : gens) {
    if (w.empty()) continue;
    VertexId prev = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      VertexId next = g.add_vertex();
      g.add_edge(prev, w[i], next);
      prev = next;
    }
    g.add_edge(prev, w.letters.back(), 0);
  }
  return {std::move(g), 0};
}

// Circular graph of a cyclic word: one vertex per letter position.
inline AGraph circular_graph(const CyclicWord& w, int rank) {
  int n = static_cast<int>(w.size());
  if (n == 0) return AGraph(rank, 1);
  AGraph g(rank, n);
  for (int i = 0; i < n; ++i) g.add_edge(i, w.letters[i], (i + 1) % n);
  g.sort_adjacency();
  return g;
}

// The subgroup representation (Gamma(H), 1): fold the bouquet of generators.
inline PointedAGraph stallings_graph(const std::vector<Word>& gens, int rank) {
  PointedAGraph bq = build_bouquet(gens, rank);
  FoldResult fr = fold(bq.graph);
  return {std::move(fr.graph), fr.vertex_map[bq.base]};
}

// Basis of the subgroup represented by (g, base): BFS spanning tree with
// letters visited in the fixed order, one word per positive non-tree edge.
inline std::vector<Word> extract_basis(const PointedAGraph& pg) {
  const AGraph& g = pg.graph;
  if (!g.is_reduced()) throw std::invalid_argument("extract_basis: graph not reduced");
  int n = g.size();
  std::vector<VertexId> parent(n, -1);
  std::vector<Letter> plabel(n, 0);
  std::vector<bool> seen(n, false);
  std::set<std::pair<VertexId, int>> tree_half_edges;
  std::vector<VertexId> order;

  std::queue<VertexId> q;
  q.push(pg.base);
  seen[pg.base] = true;
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop();
    order.push_back(x);
    for (auto [l, y] : g.adj[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      parent[y] = x;
      plabel[y] = letter_from_index(l);
      tree_half_edges.insert({x, l});
      tree_half_edges.insert({y, letter_index(inverse(letter_from_index(l)))});
      q.push(y);
    }
  }

  std::vector<Word> path(n);
  for (VertexId x : order) {
    if (parent[x] == -1) continue;
    std::vector<Letter> p = path[parent[x]].letters;
    p.push_back(plabel[x]);
    path[x] = Word(std::move(p));
  }

  std::vector<Word> basis;
  for (VertexId x : order) {
    for (auto [l, y] : g.adj[x]) {
      if (l % 2 != 0) continue;  // positive edges only
      if (tree_half_edges.count({x, l})) continue;
      if (!seen[y]) continue;
      std::vector<Letter> raw = path[x].letters;
      raw.push_back(letter_from_index(l));
      Word back = invert_word(path[y]);
      raw.insert(raw.end(), back.letters.begin(), back.letters.end());
      basis.push_back(reduce_word(raw));
    }
  }
  return basis;
}

// Canonical relabeling by BFS from the base with the fixed letter order.
// For connected reduced graphs two pointed graphs get equal strings iff
// they are isomorphic by a base-preserving label-respecting isomorphism.
inline std::string pointed_normal_form(const PointedAGraph& pg) {
  const AGraph& g = pg.graph;
  if (!g.is_reduced())
    throw std::invalid_argument("pointed_normal_form: graph not reduced");
  int n = g.size();
  std::vector<VertexId> new_id(n, -1);
  std::vector<VertexId> order;
  std::queue<VertexId> q;
  q.push(pg.base);
  new_id[pg.base] = 0;
  int next = 1;
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop();
    order.push_back(x);
    for (auto [l, y] : g.adj[x])
      if (new_id[y] == -1) {
        new_id[y] = next++;
        q.push(y);
      }
  }
  if (next != n)
    throw std::invalid_argument("pointed_normal_form: graph not connected");

  std::vector<std::tuple<VertexId, int, VertexId>> edges;
  for (VertexId x = 0; x < n; ++x)
    for (auto [l, y] : g.adj[x])
      if (l % 2 == 0) edges.emplace_back(new_id[x], l, new_id[y]);
  std::sort(edges.begin(), edges.end());

  std::ostringstream os;
  os << "agraph " << n << ' ' << g.rank << " 0\n";
  for (auto [x, l, y] : edges)
    os << x << ' ' << format_letter(letter_from_index(l), g.rank) << ' ' << y << '\n';
  return os.str();
}

// Isomorphism-invariant form of an unpointed reduced graph: per connected
// component, the least normal form over all base choices; components sorted.
inline std::string graph_normal_form(const AGraph& g) {
  int n = g.size();
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::queue<VertexId> q;
    q.push(s);
    comp[s] = nc;
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      for (auto [l, y] : g.adj[x])
        if (comp[y] == -1) {
          comp[y] = nc;
          q.push(y);
        }
    }
    ++nc;
  }
  // extract each component as its own graph
  std::vector<std::string> forms;
  for (int c = 0; c < nc; ++c) {
    std::vector<VertexId> verts;
    std::vector<VertexId> local(n, -1);
    for (VertexId x = 0; x < n; ++x)
      if (comp[x] == c) {
        local[x] = static_cast<int>(verts.size());
        verts.push_back(x);
      }
    AGraph sub(g.rank, static_cast<int>(verts.size()));
    for (VertexId x : verts)
      for (auto [l, y] : g.adj[x]) sub.adj[local[x]].emplace_back(l, local[y]);
    sub.sort_adjacency();
    std::string best;
    for (VertexId b = 0; b < sub.size(); ++b) {
      std::string f = pointed_normal_form({sub, b});
      if (best.empty() || f < best) best = std::move(f);
    }
    forms.push_back(std::move(best));
  }
  std::sort(forms.begin(), forms.end());
  std::string out;
  for (auto& f : forms) out += f;
  return out;
}

// --- text graph format ------------------------------------------------------
//
// First line: `agraph <vertex_count> <rank> [base]`, then one line per
// positive edge `u <letter> v`.  Lines starting with # are comments.

struct ParsedGraph {
  AGraph graph;
  std::optional<VertexId> base;
};

inline ParsedGraph parse_graph(std::istream& in) {
  std::string line;
  ParsedGraph out;
  bool header = false;
  std::set<std::tuple<VertexId, int, VertexId>> seen;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line.substr(0, line.find('#'));
    std::istringstream ls(trimmed);
    if (!header) {
      std::string tag;
      if (!(ls >> tag)) continue;
      if (tag != "agraph")
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected 'agraph' header, got '" + tag + "'");
      int n, rank;
      if (!(ls >> n >> rank) || n < 0 || rank < 1)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": bad agraph header");
      out.graph = AGraph(rank, n);
      int base;
      if (ls >> base) {
        out.graph.check_vertex(base);
        out.base = base;
      }
      header = true;
      continue;
    }
    VertexId u, v;
    std::string ltext;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> ltext >> v))
      throw std::invalid_argument("line " + std::to_string(lineno) + ": bad edge line");
    Word lw = parse_word(ltext);
    if (lw.size() != 1)
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": edge label '" + ltext + "' is not a single letter");
    Letter a = lw[0];
    check_letter(a, out.graph.rank);
    VertexId cu = u, cv = v;
    Letter ca = a;
    if (ca < 0) {
      std::swap(cu, cv);
      ca = -ca;
    }
    if (!seen.insert({cu, letter_index(ca), cv}).second)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": duplicate edge");
    out.graph.add_edge(u, a, v);
  }
  if (!header) throw std::invalid_argument("missing 'agraph' header line");
  out.graph.sort_adjacency();
  return out;
}

inline ParsedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline std::string write_graph(const AGraph& g, std::optional<VertexId> base = {}) {
  std::ostringstream os;
  os << "agraph " << g.size() << ' ' << g.rank;
  if (base) os << ' ' << *base;
  os << '\n';
  auto edges = g.positive_edges();
  std::sort(edges.begin(), edges.end());
  for (auto [x, a, y] : edges)
    os << x << ' ' << format_letter(a, g.rank) << ' ' << y << '\n';
  return os.str();
}

// DOT export, positive edges only.
inline std::string export_dot(const AGraph& g, std::optional<VertexId> base = {}) {
  std::ostringstream os;
  os << "digraph agraph {\n";
  for (VertexId x = 0; x < g.size(); ++x) {
    os << "  v" << x << " [label=\"" << x << "\"";
    if (base && *base == x) os << ", shape=doublecircle";
    os << "];\n";
  }
  auto edges = g.positive_edges();
  std::sort(edges.begin(), edges.end());
  for (auto [x, a, y] : edges)
    os << "  v" << x << " -> v" << y << " [label=\"" << format_letter(a, g.rank)
       << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace whmin

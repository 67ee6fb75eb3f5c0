#pragma once

// The Whitehead hypergraph of a cyclically reduced A-graph: vertices are the
// 2r letters, one hyperedge per graph vertex (its hyperlink).  Hyperedges
// with the same letter set are collapsed into a multiplicity count; capacity
// is always a multiset count.

#include <map>

#include "whmin/agraph.hpp"
#include "whmin/whitehead.hpp"

namespace whmin {

struct WhiteheadHypergraph {
  int rank = 0;
  std::vector<std::pair<LetterSet, int>> edges;  // (letter set, multiplicity)

  int total_multiplicity() const {
    int t = 0;
    for (auto [m, k] : edges) t += k;
    return t;
  }
};

inline WhiteheadHypergraph build_hypergraph(const AGraph& g) {
  if (!g.is_cyclically_reduced())
    throw std::invalid_argument("build_hypergraph: graph not cyclically reduced");
  full_letter_set(g.rank);  // rank guard
  std::map<LetterSet, int> acc;
  for (VertexId x = 0; x < g.size(); ++x) {
    LetterSet m = 0;
    for (auto [l, y] : g.adj[x]) m |= letter_bit(inverse(letter_from_index(l)));
    ++acc[m];
  }
  WhiteheadHypergraph w;
  w.rank = g.rank;
  w.edges.assign(acc.begin(), acc.end());
  return w;
}

// Disjoint multiset union, for tuples of graphs.
inline WhiteheadHypergraph merge_hypergraphs(const WhiteheadHypergraph& a,
                                             const WhiteheadHypergraph& b) {
  if (a.rank != b.rank) throw std::invalid_argument("hypergraph rank mismatch");
  std::map<LetterSet, int> acc;
  for (auto [m, k] : a.edges) acc[m] += k;
  for (auto [m, k] : b.edges) acc[m] += k;
  WhiteheadHypergraph w;
  w.rank = a.rank;
  w.edges.assign(acc.begin(), acc.end());
  return w;
}

// Number of hyperedges meeting both Y and its complement.
inline int capacity(const WhiteheadHypergraph& w, LetterSet y) {
  LetterSet full = full_letter_set(w.rank);
  int cap = 0;
  for (auto [m, k] : w.edges)
    if ((m & y) && (m & full & ~y)) cap += k;
  return cap;
}

inline int degree(const WhiteheadHypergraph& w, Letter v) {
  check_letter(v, w.rank);
  int deg = 0;
  for (auto [m, k] : w.edges)
    if (m & letter_bit(v)) deg += k;
  return deg;
}

// Exact size change of the graph under the second-kind automorphism (v, Y):
// |phi(Gamma)| - |Gamma| = cap(Y) - deg(v).
inline int predicted_delta(const WhiteheadHypergraph& w, Letter v, LetterSet y) {
  if (!(y & letter_bit(v)) || (y & letter_bit(inverse(v))))
    throw std::invalid_argument("predicted_delta: Y is not a v-cut");
  return capacity(w, y) - degree(w, v);
}

// Debug dump: one line per hyperedge, multiplicity suffix xK.
inline std::string dump_hypergraph(const WhiteheadHypergraph& w) {
  std::ostringstream os;
  for (auto [m, k] : w.edges) {
    bool first = true;
    for (Letter a : letters_of(m)) {
      if (!first) os << ',';
      os << format_letter(a, w.rank);
      first = false;
    }
    if (k > 1) os << " x" << k;
    os << '\n';
  }
  return os.str();
}

}  // namespace whmin

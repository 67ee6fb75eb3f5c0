#pragma once

// Randomized self-check harness: generators for random words, graphs and
// hypergraphs, and the two verification suites behind `oracle-check` (the
// cut/size formula and the max-flow vs exhaustive min-cut agreement).

#include <bit>
#include <random>

#include "whmin/minimize.hpp"

namespace whmin::harness {

using Rng = std::mt19937_64;

inline Word random_reduced_word(Rng& rng, int rank, int length) {
  std::vector<Letter> ls;
  ls.reserve(length);
  std::uniform_int_distribution<int> pick(0, 2 * rank - 1);
  while (static_cast<int>(ls.size()) < length) {
    Letter a = letter_from_index(pick(rng));
    if (!ls.empty() && a == inverse(ls.back())) continue;
    ls.push_back(a);
  }
  return Word(std::move(ls));
}

inline CyclicWord random_cyclic_word(Rng& rng, int rank, int length) {
  for (;;) {
    Word w = random_reduced_word(rng, rank, length);
    if (is_cyclically_reduced(w.letters)) return CyclicWord(w);
  }
}

// Random connected cyclically reduced graph: cyclic core of the Stallings
// graph of a few random words.  Retries until the core is a real core
// (every hyperlink has cardinality >= 2) of size <= max_size.
inline AGraph random_cyclically_reduced_graph(Rng& rng, int rank, int max_size,
                                              int max_gens = 3) {
  std::uniform_int_distribution<int> ngens(1, max_gens);
  std::uniform_int_distribution<int> wlen(1, std::max(2, max_size));
  for (;;) {
    std::vector<Word> gens;
    int m = ngens(rng);
    for (int i = 0; i < m; ++i) gens.push_back(random_reduced_word(rng, rank, wlen(rng)));
    AGraph core = cyclic_core(stallings_graph(gens, rank).graph).core;
    if (core.size() <= max_size && core.is_cyclically_reduced()) return core;
  }
}

inline WhiteheadHypergraph random_hypergraph(Rng& rng, int rank, int max_edges) {
  std::uniform_int_distribution<int> nedges(1, max_edges);
  std::uniform_int_distribution<std::uint64_t> bits(0, full_letter_set(rank));
  std::map<LetterSet, int> acc;
  int m = nedges(rng);
  while (m > 0) {
    LetterSet e = bits(rng);
    if (std::popcount(e) < 2) continue;
    ++acc[e];
    --m;
  }
  WhiteheadHypergraph w;
  w.rank = rank;
  w.edges.assign(acc.begin(), acc.end());
  return w;
}

inline LetterSet random_vcut(Rng& rng, int rank, Letter v) {
  std::uniform_int_distribution<std::uint64_t> bits(0, full_letter_set(rank));
  LetterSet y = bits(rng);
  y |= letter_bit(v);
  y &= ~letter_bit(inverse(v));
  return y;
}

// |phi(Gamma)| - |Gamma| == cap(Y) - deg(v), checked on random graphs and
// random v-cuts.  Returns the number of mismatches (0 = pass).
inline int check_delta_formula(Rng& rng, int cases, int max_rank = 4,
                               int max_size = 30) {
  int mismatches = 0;
  std::uniform_int_distribution<int> rk(1, max_rank);
  for (int i = 0; i < cases; ++i) {
    int rank = rk(rng);
    AGraph g = random_cyclically_reduced_graph(rng, rank, max_size);
    WhiteheadHypergraph w = build_hypergraph(g);
    std::uniform_int_distribution<int> lv(0, 2 * rank - 1);
    Letter v = letter_from_index(lv(rng));
    LetterSet y = random_vcut(rng, rank, v);
    WhiteheadAut phi = WhiteheadAut::second_kind(v, y, rank);
    int actual = apply_to_cyclic_graph(phi, g).size() - g.size();
    if (actual != predicted_delta(w, v, y)) ++mismatches;
  }
  return mismatches;
}

// min_vcut (max-flow) capacity == brute-force capacity for every letter v,
// and the flow witness is a valid v-cut of that capacity.
inline int check_mincut_agreement(Rng& rng, int cases, int max_rank = 4,
                                  int max_edges = 40) {
  int mismatches = 0;
  std::uniform_int_distribution<int> rk(1, max_rank);
  for (int i = 0; i < cases; ++i) {
    int rank = rk(rng);
    WhiteheadHypergraph w = random_hypergraph(rng, rank, max_edges);
    for (int vi = 0; vi < 2 * rank; ++vi) {
      Letter v = letter_from_index(vi);
      CutResult flow = min_vcut(w, v);
      CutResult brute = brute_force_min_vcut(w, v);
      bool ok = flow.cap == brute.cap && capacity(w, flow.y) == flow.cap &&
                (flow.y & letter_bit(v)) && !(flow.y & letter_bit(inverse(v)));
      if (!ok) ++mismatches;
    }
  }
  return mismatches;
}

}  // namespace whmin::harness

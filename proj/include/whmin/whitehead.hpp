#pragma once

// Whitehead automorphisms of both kinds, their action on letters, words and
// (pointed) A-graphs, and enumeration of the second kind.

#include <cstdint>
#include <optional>
#include <sstream>

#include "whmin/agraph.hpp"
#include "whmin/words.hpp"

namespace whmin {

// Bitset over the 2r letters of the symmetrized alphabet, indexed by
// letter_index().  Ranks above 32 are rejected where cuts are involved.
using LetterSet = std::uint64_t;

inline LetterSet letter_bit(Letter a) { return LetterSet{1} << letter_index(a); }

inline LetterSet full_letter_set(int rank) {
  if (rank > 32) throw std::invalid_argument("letter sets support rank <= 32");
  return 2 * rank == 64 ? ~LetterSet{0} : (LetterSet{1} << (2 * rank)) - 1;
}

inline std::vector<Letter> letters_of(LetterSet s) {
  std::vector<Letter> out;
  for (int i = 0; i < 64; ++i)
    if (s >> i & 1) out.push_back(letter_from_index(i));
  return out;
}

struct WhiteheadAut {
  enum class Kind { first, second };
  Kind kind = Kind::second;
  int rank = 0;

  // first kind: a |-> sign[a] * perm[a], a permutation of the letters
  std::vector<int> perm;   // perm[i] = image generator of generator i+1
  std::vector<int> signs;  // +-1 per generator

  // second kind: the pair (v, Y) with v in Y, v^-1 not in Y
  Letter v = 0;
  LetterSet cut = 0;

  static WhiteheadAut first_kind(std::vector<int> perm, std::vector<int> signs) {
    WhiteheadAut a;
    a.kind = Kind::first;
    a.rank = static_cast<int>(perm.size());
    std::vector<bool> hit(a.rank, false);
    for (int p : perm) {
      if (p < 1 || p > a.rank || hit[p - 1])
        throw std::invalid_argument("first-kind aut: not a permutation");
      hit[p - 1] = true;
    }
    if (signs.size() != perm.size())
      throw std::invalid_argument("first-kind aut: signs/perm size mismatch");
    for (int s : signs)
      if (s != 1 && s != -1) throw std::invalid_argument("first-kind aut: bad sign");
    a.perm = std::move(perm);
    a.signs = std::move(signs);
    return a;
  }

  static WhiteheadAut second_kind(Letter v, LetterSet cut, int rank) {
    check_letter(v, rank);
    if (!(cut & letter_bit(v)) || (cut & letter_bit(inverse(v))))
      throw std::invalid_argument("second-kind aut: Y must be a v-cut");
    if (cut & ~full_letter_set(rank))
      throw std::invalid_argument("second-kind aut: Y has letters beyond the rank");
    WhiteheadAut a;
    a.kind = Kind::second;
    a.rank = rank;
    a.v = v;
    a.cut = cut;
    return a;
  }

  bool is_identity() const {
    if (kind == Kind::second) return cut == letter_bit(v);
    for (int i = 0; i < rank; ++i)
      if (perm[i] != i + 1 || signs[i] != 1) return false;
    return true;
  }

  friend bool operator==(const WhiteheadAut&, const WhiteheadAut&) = default;
};

inline Word apply_to_letter(const WhiteheadAut& phi, Letter a) {
  check_letter(a, phi.rank);
  if (phi.kind == WhiteheadAut::Kind::first) {
    int g = a > 0 ? a : -a;
    Letter img = phi.signs[g - 1] * phi.perm[g - 1];
    return Word({a > 0 ? img : inverse(img)});
  }
  if (a == phi.v || a == inverse(phi.v)) return Word({a});
  std::vector<Letter> raw;
  if (phi.cut & letter_bit(inverse(a))) raw.push_back(inverse(phi.v));
  raw.push_back(a);
  if (phi.cut & letter_bit(a)) raw.push_back(phi.v);
  return reduce_word(raw);
}

inline Word apply_to_word(const WhiteheadAut& phi, const Word& u) {
  std::vector<Letter> raw;
  raw.reserve(3 * u.size());
  for (Letter a : u.letters) {
    Word img = apply_to_letter(phi, a);
    raw.insert(raw.end(), img.letters.begin(), img.letters.end());
  }
  return reduce_word(raw);
}

// Images of the positive generators, for the generic substitution machinery.
inline std::vector<Word> letter_images(const WhiteheadAut& phi) {
  std::vector<Word> out;
  out.reserve(phi.rank);
  for (int a = 1; a <= phi.rank; ++a) out.push_back(apply_to_letter(phi, a));
  return out;
}

// Replaces each positive edge (x, a, y) by a path labeled images[a-1] with
// the same endpoints, then folds.  Returns the reduced graph and the
// old-vertex relabeling.
inline FoldResult subdivide_and_fold(const AGraph& g, const std::vector<Word>& images) {
  if (static_cast<int>(images.size()) != g.rank)
    throw std::invalid_argument("substitution needs one image per generator");
  for (const Word& w : images)
    if (w.empty())
      throw std::invalid_argument("substitution image must be nonempty");
  AGraph sub(g.rank, g.size());
  for (auto [x, a, y] : g.positive_edges()) {
    const Word& w = images[a - 1];
    VertexId prev = x;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      VertexId nxt = sub.add_vertex();
      sub.add_edge(prev, w[i], nxt);
      prev = nxt;
    }
    sub.add_edge(prev, w.letters.back(), y);
  }
  FoldResult fr = fold(sub);
  fr.vertex_map.resize(g.size());  // only the original vertices are tracked
  return fr;
}

// phi_bullet: subdivide, fold, trim all endpoints except the base.
inline PointedAGraph apply_substitution(const std::vector<Word>& images,
                                        const PointedAGraph& pg) {
  FoldResult fr = subdivide_and_fold(pg.graph, images);
  return trim_except(fr.graph, fr.vertex_map[pg.base]);
}

inline PointedAGraph apply_to_pointed_graph(const WhiteheadAut& phi,
                                            const PointedAGraph& pg) {
  return apply_substitution(letter_images(phi), pg);
}

// phi(Gamma) = cc(phi_bullet(Gamma)) for cyclically reduced graphs.
inline AGraph apply_substitution_cyclic(const std::vector<Word>& images,
                                        const AGraph& g) {
  FoldResult fr = subdivide_and_fold(g, images);
  return cyclic_core(fr.graph).core;
}

inline AGraph apply_to_cyclic_graph(const WhiteheadAut& phi, const AGraph& g) {
  return apply_substitution_cyclic(letter_images(phi), g);
}

// Every non-identity second-kind automorphism, each exactly once:
// 2r * (2^(2r-2) - 1) of them.
inline std::vector<WhiteheadAut> enumerate_second_kind(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  if (rank > 8) throw std::invalid_argument("second-kind enumeration capped at rank 8");
  std::vector<WhiteheadAut> out;
  std::vector<int> free_idx;
  for (int i = 0; i < 2 * rank; ++i) free_idx.push_back(i);
  for (int vi = 0; vi < 2 * rank; ++vi) {
    Letter v = letter_from_index(vi);
    int vbar = letter_index(inverse(v));
    std::vector<int> rest;
    for (int i = 0; i < 2 * rank; ++i)
      if (i != vi && i != vbar) rest.push_back(i);
    std::uint64_t count = std::uint64_t{1} << rest.size();
    for (std::uint64_t mask = 1; mask < count; ++mask) {  // mask 0 = identity
      LetterSet cut = letter_bit(v);
      for (std::size_t k = 0; k < rest.size(); ++k)
        if (mask >> k & 1) cut |= LetterSet{1} << rest[k];
      out.push_back(WhiteheadAut::second_kind(v, cut, rank));
    }
  }
  return out;
}

// --- traces -----------------------------------------------------------------

// One step of a minimization: an automorphism and/or the conjugator picked
// up when re-basing at the cyclic core.  Applying the step to x gives
// c^-1 * phi(x) * c.
struct AutStep {
  std::optional<WhiteheadAut> aut;
  Word conjugator;
};

using MinimizationTrace = std::vector<AutStep>;

inline Word apply_step(const AutStep& step, const Word& u) {
  Word w = step.aut ? apply_to_word(*step.aut, u) : u;
  if (step.conjugator.empty()) return w;
  return concat(concat(invert_word(step.conjugator), w), step.conjugator);
}

inline Word apply_trace(const MinimizationTrace& trace, const Word& u) {
  Word w = u;
  for (const AutStep& s : trace) w = apply_step(s, w);
  return w;
}

// Explicit composition of a trace into generator images.  Opt-in utility:
// the composed images can grow exponentially in the trace length, which is
// why traces are stored as tuples in the first place.
inline std::vector<Word> compose_trace(const MinimizationTrace& trace, int rank) {
  std::vector<Word> images;
  for (int a = 1; a <= rank; ++a) images.push_back(apply_trace(trace, Word({a})));
  return images;
}

// --- textual forms ----------------------------------------------------------
//
// Second kind: `(v | y1,y2,...)`, first kind: `perm: a->b,...; signs: +,-`.

inline std::string format_aut(const WhiteheadAut& phi) {
  std::ostringstream os;
  if (phi.kind == WhiteheadAut::Kind::second) {
    os << '(' << format_letter(phi.v, phi.rank) << " | ";
    bool first = true;
    for (Letter a : letters_of(phi.cut)) {
      if (!first) os << ',';
      os << format_letter(a, phi.rank);
      first = false;
    }
    os << ')';
  } else {
    os << "perm: ";
    for (int i = 0; i < phi.rank; ++i) {
      if (i) os << ',';
      os << format_letter(i + 1, phi.rank) << "->" << format_letter(phi.perm[i], phi.rank);
    }
    os << "; signs: ";
    for (int i = 0; i < phi.rank; ++i) {
      if (i) os << ',';
      os << (phi.signs[i] > 0 ? '+' : '-');
    }
  }
  return os.str();
}

}  // namespace whmin

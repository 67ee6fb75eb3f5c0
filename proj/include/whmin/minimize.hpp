#pragma once

// Greedy Whitehead minimization: per iteration, build the Whitehead
// hypergraph, pick the move with the most negative predicted size change
// via min-cut, apply it, repeat until no move decreases the size.

#include "whmin/mincut.hpp"

namespace whmin {

struct MinimizationResult {
  // populated according to the entry point
  AGraph graph;               // minimize_conjugacy / minimize_cyclic_word
  std::vector<AGraph> tuple;  // minimize_tuple
  PointedAGraph pointed;      // minimize_subgroup / minimize_word
  std::vector<Word> basis;    // minimize_subgroup
  Word word;                  // minimize_word
  CyclicWord cyclic;          // minimize_cyclic_word

  MinimizationTrace trace;
  std::vector<int> size_history;

  int final_size() const { return size_history.back(); }
};

namespace detail {

// Letters absent from the input are frozen: minimization runs over the
// compact alphabet of occurring generators and results are re-embedded.
struct LetterEmbedding {
  int full_rank = 0;
  std::vector<int> compact_to_full;  // compact generator i+1 -> full generator
  std::vector<int> full_to_compact;  // 0 if absent

  int compact_rank() const { return static_cast<int>(compact_to_full.size()); }

  Letter to_full(Letter a) const {
    int g = a > 0 ? a : -a;
    int f = compact_to_full[g - 1];
    return a > 0 ? f : -f;
  }
  Letter to_compact(Letter a) const {
    int g = a > 0 ? a : -a;
    int c = full_to_compact[g - 1];
    return a > 0 ? c : -c;
  }
};

inline LetterEmbedding embedding_for(const std::vector<bool>& occurs, int full_rank) {
  LetterEmbedding emb;
  emb.full_rank = full_rank;
  emb.full_to_compact.assign(full_rank, 0);
  for (int g = 1; g <= full_rank; ++g)
    if (occurs[g - 1]) {
      emb.compact_to_full.push_back(g);
      emb.full_to_compact[g - 1] = static_cast<int>(emb.compact_to_full.size());
    }
  return emb;
}

inline LetterEmbedding graph_embedding(const AGraph& g) {
  std::vector<bool> occurs(g.rank, false);
  for (auto [x, a, y] : g.positive_edges()) occurs[a - 1] = true;
  return embedding_for(occurs, g.rank);
}

template <typename MapLetter>
inline AGraph map_graph_letters(const AGraph& g, int new_rank, MapLetter map) {
  AGraph out(new_rank, g.size());
  for (auto [x, a, y] : g.positive_edges()) out.add_edge(x, map(a), y);
  out.sort_adjacency();
  return out;
}

inline Word embed_word(const Word& w, const LetterEmbedding& emb) {
  std::vector<Letter> ls = w.letters;
  for (Letter& a : ls) a = emb.to_full(a);
  return Word(std::move(ls));
}

inline WhiteheadAut embed_aut(const WhiteheadAut& phi, const LetterEmbedding& emb) {
  LetterSet cut = 0;
  for (Letter a : letters_of(phi.cut)) cut |= letter_bit(emb.to_full(a));
  return WhiteheadAut::second_kind(emb.to_full(phi.v), cut, emb.full_rank);
}

// Shared greedy loop on a tuple of compact-alphabet cyclically reduced
// graphs; conjugators are not tracked here.
inline void greedy_loop(std::vector<AGraph>& graphs, MinimizationTrace& trace,
                        std::vector<int>& history, const LetterEmbedding& emb,
                        int max_threads) {
  auto total_size = [&] {
    int t = 0;
    for (const AGraph& g : graphs) t += g.size();
    return t;
  };
  for (;;) {
    WhiteheadHypergraph w;
    w.rank = emb.compact_rank();
    for (const AGraph& g : graphs)
      if (!g.positive_edges().empty()) w = merge_hypergraphs(w, build_hypergraph(g));
    if (w.edges.empty()) break;
    auto mv = best_whitehead_move(w, max_threads);
    if (!mv) break;
    WhiteheadAut aut = WhiteheadAut::second_kind(mv->v, mv->y, emb.compact_rank());
    int before = total_size();
    for (AGraph& g : graphs)
      if (!g.positive_edges().empty()) g = apply_to_cyclic_graph(aut, g);
    if (total_size() != before + mv->delta)
      throw std::logic_error("size change disagrees with the cut formula");
    trace.push_back({embed_aut(aut, emb), Word{}});
    history.push_back(total_size());
  }
}

}  // namespace detail

// Minimum-size representative of the conjugacy class represented by a
// cyclically reduced graph, with the witnessing automorphism sequence.
inline MinimizationResult minimize_conjugacy(const AGraph& g, int max_threads = 1) {
  if (g.size() == 0) throw std::invalid_argument("minimize_conjugacy: empty graph");
  MinimizationResult res;
  res.size_history.push_back(g.size());
  if (g.positive_edges().empty()) {
    if (g.size() != 1)
      throw std::invalid_argument("minimize_conjugacy: graph not cyclically reduced");
    res.graph = g;
    return res;
  }
  if (!g.is_cyclically_reduced())
    throw std::invalid_argument("minimize_conjugacy: graph not cyclically reduced");

  detail::LetterEmbedding emb = detail::graph_embedding(g);
  std::vector<AGraph> graphs{detail::map_graph_letters(
      g, emb.compact_rank(), [&](Letter a) { return emb.to_compact(a); })};
  detail::greedy_loop(graphs, res.trace, res.size_history, emb, max_threads);
  res.graph = detail::map_graph_letters(graphs[0], emb.full_rank,
                                        [&](Letter a) { return emb.to_full(a); });
  return res;
}

// Tuple variant: one shared automorphism per step, chosen on the disjoint
// union of the component hypergraphs; minimizes the total size.
inline MinimizationResult minimize_tuple(const std::vector<AGraph>& gs,
                                         int max_threads = 1) {
  if (gs.empty()) throw std::invalid_argument("minimize_tuple: empty tuple");
  int rank = gs.front().rank;
  std::vector<bool> occurs(rank, false);
  int total = 0;
  for (const AGraph& g : gs) {
    if (g.rank != rank) throw std::invalid_argument("minimize_tuple: rank mismatch");
    if (!g.positive_edges().empty() && !g.is_cyclically_reduced())
      throw std::invalid_argument("minimize_tuple: component not cyclically reduced");
    for (auto [x, a, y] : g.positive_edges()) occurs[a - 1] = true;
    total += g.size();
  }
  MinimizationResult res;
  res.size_history.push_back(total);
  detail::LetterEmbedding emb = detail::embedding_for(occurs, rank);
  std::vector<AGraph> graphs;
  for (const AGraph& g : gs)
    graphs.push_back(detail::map_graph_letters(
        g, emb.compact_rank(), [&](Letter a) { return emb.to_compact(a); }));
  detail::greedy_loop(graphs, res.trace, res.size_history, emb, max_threads);
  for (const AGraph& g : graphs)
    res.tuple.push_back(detail::map_graph_letters(
        g, emb.full_rank, [&](Letter a) { return emb.to_full(a); }));
  return res;
}

// Subgroup variant: start from (Gamma(H), 1), re-base at the cyclic core
// after every step and record the conjugator b(1) alongside the
// automorphism, per the re-based greedy loop.
inline MinimizationResult minimize_subgroup(const std::vector<Word>& gens, int rank,
                                            int max_threads = 1) {
  for (const Word& w : gens)
    for (Letter a : w.letters) check_letter(a, rank);
  PointedAGraph pg = stallings_graph(gens, rank);
  MinimizationResult res;
  res.size_history.push_back(pg.size());
  if (pg.graph.positive_edges().empty()) {  // trivial subgroup
    res.pointed = pg;
    return res;
  }

  detail::LetterEmbedding emb = detail::graph_embedding(pg.graph);
  AGraph cg = detail::map_graph_letters(pg.graph, emb.compact_rank(),
                                        [&](Letter a) { return emb.to_compact(a); });
  VertexId base = pg.base;

  CoreResult cr = cyclic_core(cg);
  Word conj = cr.branches.b[base];
  base = cr.branches.beta[base];
  cg = std::move(cr.core);
  if (!conj.empty()) {
    res.trace.push_back({std::nullopt, detail::embed_word(conj, emb)});
    res.size_history.push_back(cg.size());
  }

  for (;;) {
    WhiteheadHypergraph w = build_hypergraph(cg);
    auto mv = best_whitehead_move(w, max_threads);
    if (!mv) break;
    WhiteheadAut aut = WhiteheadAut::second_kind(mv->v, mv->y, emb.compact_rank());
    FoldResult fr = subdivide_and_fold(cg, letter_images(aut));
    CoreResult step = cyclic_core(fr.graph);
    VertexId folded_base = fr.vertex_map[base];
    Word step_conj = step.branches.b[folded_base];
    if (step.core.size() != cg.size() + mv->delta)
      throw std::logic_error("size change disagrees with the cut formula");
    base = step.branches.beta[folded_base];
    cg = std::move(step.core);
    res.trace.push_back(
        {detail::embed_aut(aut, emb), detail::embed_word(step_conj, emb)});
    res.size_history.push_back(cg.size());
  }

  res.pointed = {detail::map_graph_letters(cg, emb.full_rank,
                                           [&](Letter a) { return emb.to_full(a); }),
                 base};
  res.basis = extract_basis(res.pointed);
  return res;
}

// Word variant: run the subgroup loop on <u> while carrying the word along
// through each recorded step.  The carried length never exceeds |u|.
inline MinimizationResult minimize_word(const Word& u, int rank, int max_threads = 1) {
  MinimizationResult res;
  if (u.empty()) {
    res.size_history.push_back(0);
    return res;
  }
  res = minimize_subgroup({u}, rank, max_threads);
  Word cur = u;
  for (const AutStep& step : res.trace) {
    cur = apply_step(step, cur);
    if (cur.size() > u.size())
      throw std::logic_error("carried word grew beyond the input length");
  }
  if (static_cast<int>(cur.size()) != res.final_size())
    throw std::logic_error("carried word length disagrees with the graph size");
  res.word = cur;
  return res;
}

namespace detail {

// Reads a cyclic word back off a circular graph.  Deterministic: the least
// of the two traversal directions, in canonical rotation.
inline CyclicWord cycle_word(const AGraph& g) {
  int n = g.size();
  if (n == 1 && g.adj[0].empty()) return CyclicWord{};
  std::vector<Letter> w;
  VertexId cur = 0;
  auto [l0, t0] = g.adj[0][0];
  Letter arrived = letter_from_index(l0);
  w.push_back(arrived);
  cur = t0;
  for (int i = 1; i < n; ++i) {
    if (g.adj[cur].size() != 2)
      throw std::invalid_argument("cycle_word: graph is not a cycle");
    bool advanced = false;
    for (auto [l, t] : g.adj[cur]) {
      Letter a = letter_from_index(l);
      if (a == inverse(arrived)) continue;  // the dual of the arrival edge
      w.push_back(a);
      arrived = a;
      cur = t;
      advanced = true;
      break;
    }
    if (!advanced) throw std::invalid_argument("cycle_word: stuck traversal");
  }
  if (cur != 0) throw std::invalid_argument("cycle_word: graph is not a single cycle");
  CyclicWord fwd(w);
  CyclicWord bwd(invert_word(Word(std::move(w))).letters);
  return std::min(fwd, bwd);
}

}  // namespace detail

inline MinimizationResult minimize_cyclic_word(const CyclicWord& u, int rank,
                                               int max_threads = 1) {
  for (Letter a : u.letters) check_letter(a, rank);
  if (u.empty()) {
    MinimizationResult res;
    res.size_history.push_back(0);
    return res;
  }
  MinimizationResult res = minimize_conjugacy(circular_graph(u, rank), max_threads);
  res.cyclic = detail::cycle_word(res.graph);
  return res;
}

}  // namespace whmin

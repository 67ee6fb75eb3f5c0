#pragma once

// Minimum-capacity v-cuts of a Whitehead hypergraph, solved as a directed
// s-t max-flow on a hyperedge-gadget network (blocking flows, Dinic style),
// plus an exhaustive oracle for small ranks.

#include <future>
#include <limits>

#include "whmin/hypergraph.hpp"

namespace whmin {

// Directed flow network with paired residual arcs.
struct FlowNetwork {
  struct Arc {
    int to;
    long long cap;
    int rev;  // index of the reverse arc in arcs[to]
  };
  std::vector<std::vector<Arc>> arcs;
  int source = 0;
  int sink = 0;

  explicit FlowNetwork(int nodes) : arcs(nodes) {}

  void add_arc(int from, int to, long long cap) {
    arcs[from].push_back({to, cap, static_cast<int>(arcs[to].size())});
    arcs[to].push_back({from, 0, static_cast<int>(arcs[from].size()) - 1});
  }

  long long max_flow() {
    long long flow = 0;
    std::vector<int> level(arcs.size());
    std::vector<std::size_t> it(arcs.size());
    while (bfs_levels(level)) {
      std::fill(it.begin(), it.end(), 0);
      while (long long f = augment(source, std::numeric_limits<long long>::max(),
                                   level, it))
        flow += f;
    }
    return flow;
  }

  // Nodes reachable from the source in the residual network.  After a max
  // flow this is the unique source-minimal min cut, so witnesses are
  // reproducible across platforms.
  std::vector<bool> residual_reachable() const {
    std::vector<bool> seen(arcs.size(), false);
    std::vector<int> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const Arc& a : arcs[x])
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = true;
          stack.push_back(a.to);
        }
    }
    return seen;
  }

 private:
  bool bfs_levels(std::vector<int>& level) {
    std::fill(level.begin(), level.end(), -1);
    std::vector<int> queue{source};
    level[source] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int x = queue[h];
      for (const Arc& a : arcs[x])
        if (a.cap > 0 && level[a.to] == -1) {
          level[a.to] = level[x] + 1;
          queue.push_back(a.to);
        }
    }
    return level[sink] != -1;
  }

  long long augment(int x, long long limit, const std::vector<int>& level,
                    std::vector<std::size_t>& it) {
    if (x == sink) return limit;
    for (; it[x] < arcs[x].size(); ++it[x]) {
      Arc& a = arcs[x][it[x]];
      if (a.cap <= 0 || level[a.to] != level[x] + 1) continue;
      long long f = augment(a.to, std::min(limit, a.cap), level, it);
      if (f > 0) {
        a.cap -= f;
        arcs[a.to][a.rev].cap += f;
        return f;
      }
    }
    return 0;
  }
};

struct CutResult {
  LetterSet y = 0;
  int cap = 0;
};

// Gadget reduction: letter nodes 0..2r-1, then per hyperedge d a pair
// (d_in, d_out) joined by an arc of capacity mult(d); arcs u -> d_in and
// d_out -> u of effectively infinite capacity for each u in kappa(d).
// Finite s-t cuts then correspond to v-cuts, capacity for capacity.
inline FlowNetwork hypergraph_to_network(const WhiteheadHypergraph& w, Letter v) {
  check_letter(v, w.rank);
  int letters = 2 * w.rank;
  FlowNetwork net(letters + 2 * static_cast<int>(w.edges.size()));
  net.source = letter_index(v);
  net.sink = letter_index(inverse(v));
  long long inf = w.total_multiplicity() + 1;
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    auto [mask, mult] = w.edges[i];
    int din = letters + 2 * static_cast<int>(i);
    int dout = din + 1;
    net.add_arc(din, dout, mult);
    for (Letter a : letters_of(mask)) {
      net.add_arc(letter_index(a), din, inf);
      net.add_arc(dout, letter_index(a), inf);
    }
  }
  return net;
}

// Minimum-capacity v-cut via max-flow; the witness is the set of letters
// reachable from the source in the final residual network.
inline CutResult min_vcut(const WhiteheadHypergraph& w, Letter v) {
  FlowNetwork net = hypergraph_to_network(w, v);
  long long flow = net.max_flow();
  std::vector<bool> reach = net.residual_reachable();
  LetterSet y = 0;
  for (int i = 0; i < 2 * w.rank; ++i)
    if (reach[i]) y |= LetterSet{1} << i;
  CutResult res{y, static_cast<int>(flow)};
  if (capacity(w, y) != res.cap)
    throw std::logic_error("min_vcut: witness capacity does not match flow value");
  return res;
}

// Exhaustive oracle over all 2^(2r-2) v-cuts; ties break to the numerically
// least bitset.  Guarded to rank <= 8.
inline CutResult brute_force_min_vcut(const WhiteheadHypergraph& w, Letter v) {
  check_letter(v, w.rank);
  if (w.rank > 8)
    throw std::invalid_argument("brute_force_min_vcut: rank capped at 8");
  std::vector<int> rest;
  for (int i = 0; i < 2 * w.rank; ++i)
    if (i != letter_index(v) && i != letter_index(inverse(v))) rest.push_back(i);
  CutResult best{0, std::numeric_limits<int>::max()};
  std::uint64_t count = std::uint64_t{1} << rest.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    LetterSet y = letter_bit(v);
    for (std::size_t k = 0; k < rest.size(); ++k)
      if (mask >> k & 1) y |= LetterSet{1} << rest[k];
    int cap = capacity(w, y);
    if (cap < best.cap || (cap == best.cap && y < best.y)) best = {y, cap};
  }
  return best;
}

struct WhiteheadMove {
  Letter v = 0;
  LetterSet y = 0;
  int delta = 0;
};

// Best size-decreasing second-kind move, if any: evaluates min_vcut for each
// positive letter (complement symmetry covers the inverses) and returns the
// most negative cap - deg, ties to the smallest v then the least Y.
// max_threads > 1 evaluates the per-letter searches concurrently; the final
// selection is sequential, so the result is scheduling-independent.
inline std::optional<WhiteheadMove> best_whitehead_move(const WhiteheadHypergraph& w,
                                                        int max_threads = 1) {
  std::vector<std::optional<WhiteheadMove>> cand(w.rank);
  auto eval = [&](int a) -> std::optional<WhiteheadMove> {
    if (degree(w, a) == 0) return std::nullopt;  // frozen letter
    CutResult c = min_vcut(w, a);
    return WhiteheadMove{a, c.y, c.cap - degree(w, a)};
  };
  if (max_threads > 1 && w.rank > 1) {
    std::vector<std::future<std::optional<WhiteheadMove>>> futs;
    for (int a = 1; a <= w.rank; ++a)
      futs.push_back(std::async(std::launch::async, eval, a));
    for (int a = 1; a <= w.rank; ++a) cand[a - 1] = futs[a - 1].get();
  } else {
    for (int a = 1; a <= w.rank; ++a) cand[a - 1] = eval(a);
  }
  std::optional<WhiteheadMove> best;
  for (const auto& m : cand) {
    if (!m) continue;
    if (!best || m->delta < best->delta ||
        (m->delta == best->delta && (m->v < best->v ||
                                     (m->v == best->v && m->y < best->y))))
      best = m;
  }
  if (!best || best->delta >= 0) return std::nullopt;
  return best;
}

}  // namespace whmin

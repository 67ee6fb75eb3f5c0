#pragma once

// The worked examples used across the test suites: the four small rank-2
// graphs and the 6-vertex rank-5 graph with its hypergraph table.

#include "whmin/agraph.hpp"

namespace whmin::testdata {

// 3 vertices: 0-a->1, 0-b->2, 1-a->2, 2-b->1.  Cyclically reduced.
inline AGraph gamma1() {
  AGraph g(2, 3);
  g.add_edge(0, 1, 1);
  g.add_edge(0, 2, 2);
  g.add_edge(1, 1, 2);
  g.add_edge(2, 2, 1);
  g.sort_adjacency();
  return g;
}

// 4 vertices, vertex 3 is an endpoint with branch a to vertex 0.
// 3-a->0, 0-a->1, 1-a->2, 2-b->1, 0-b->2.
inline AGraph gamma2() {
  AGraph g(2, 4);
  g.add_edge(3, 1, 0);
  g.add_edge(0, 1, 1);
  g.add_edge(1, 1, 2);
  g.add_edge(2, 2, 1);
  g.add_edge(0, 2, 2);
  g.sort_adjacency();
  return g;
}

// 4 vertices, vertex 3 is an endpoint reached by b from vertex 1.
// 0-a->1, 1-b->3, 0-b->2, 2-b->1, 1-a->2.
inline AGraph gamma3() {
  AGraph g(2, 4);
  g.add_edge(0, 1, 1);
  g.add_edge(1, 2, 3);
  g.add_edge(0, 2, 2);
  g.add_edge(2, 2, 1);
  g.add_edge(1, 1, 2);
  g.sort_adjacency();
  return g;
}

// 6 vertices over rank 5 (a..e):
// 0-a->3, 0-b->1, 1-d->2, 4-c->2, 4-d->5, 2-e->5, 3-a->4, 1-c->4, 4-a->1.
inline AGraph gamma_rank5() {
  AGraph g(5, 6);
  g.add_edge(0, 1, 3);
  g.add_edge(0, 2, 1);
  g.add_edge(1, 4, 2);
  g.add_edge(4, 3, 2);
  g.add_edge(4, 4, 5);
  g.add_edge(2, 5, 5);
  g.add_edge(3, 1, 4);
  g.add_edge(1, 3, 4);
  g.add_edge(4, 1, 1);
  g.sort_adjacency();
  return g;
}

}  // namespace whmin::testdata

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "worked_examples.hpp"
#include "whmin/harness.hpp"
#include "whmin/hypergraph.hpp"

using namespace whmin;

namespace {

LetterSet bits(std::initializer_list<Letter> ls) {
  LetterSet s = 0;
  for (Letter a : ls) s |= letter_bit(a);
  return s;
}

}  // namespace

TEST_CASE("hyperlink table of the 6-vertex rank-5 graph") {
  WhiteheadHypergraph w = build_hypergraph(testdata::gamma_rank5());
  std::map<LetterSet, int> got(w.edges.begin(), w.edges.end());
  std::map<LetterSet, int> want{
      {bits({-1, -2}), 1},          // vertex 0: {a^-1, b^-1}
      {bits({1, 2, -3, -4}), 1},    // vertex 1
      {bits({3, 4, -5}), 1},        // vertex 2
      {bits({1, -1}), 1},           // vertex 3
      {bits({1, -1, 3, -3, -4}), 1},// vertex 4
      {bits({4, 5}), 1},            // vertex 5
  };
  CHECK(got == want);
  CHECK(w.total_multiplicity() == 6);

  CHECK(degree(w, 1) == 3);
  CHECK(capacity(w, bits({1, 2, -3, -4})) == 2);
  CHECK(capacity(w, bits({1, -2, -3})) == 4);
  CHECK(predicted_delta(w, 1, bits({1, 2, -3, -4})) == -1);
  CHECK(predicted_delta(w, 1, bits({1, -2, -3})) == 1);
}

TEST_CASE("predicted deltas match the applied automorphism on the rank-5 graph") {
  AGraph g = testdata::gamma_rank5();
  WhiteheadAut down = WhiteheadAut::second_kind(1, bits({1, 2, -3, -4}), 5);
  CHECK(apply_to_cyclic_graph(down, g).size() == 5);
  WhiteheadAut up = WhiteheadAut::second_kind(1, bits({1, -2, -3}), 5);
  CHECK(apply_to_cyclic_graph(up, g).size() == 7);
}

TEST_CASE("hypergraph of the 3-vertex graph, with multiplicities") {
  WhiteheadHypergraph w = build_hypergraph(testdata::gamma1());
  std::map<LetterSet, int> got(w.edges.begin(), w.edges.end());
  std::map<LetterSet, int> want{
      {bits({-1, -2}), 1},
      {bits({1, -1, 2}), 1},
      {bits({1, 2, -2}), 1},
  };
  CHECK(got == want);

  // circular graph of (ab)^2: two distinct hyperlinks, each twice
  WhiteheadHypergraph w2 = build_hypergraph(circular_graph(
      CyclicWord(parse_word("abab")), 2));
  std::map<LetterSet, int> got2(w2.edges.begin(), w2.edges.end());
  std::map<LetterSet, int> want2{{bits({-1, 2}), 2}, {bits({1, -2}), 2}};
  CHECK(got2 == want2);
  CHECK(w2.total_multiplicity() == 4);
}

TEST_CASE("build_hypergraph rejects graphs with endpoints") {
  CHECK_THROWS_AS(build_hypergraph(testdata::gamma2()), std::invalid_argument);
}

TEST_CASE("capacity is complement-symmetric and submodular") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    WhiteheadHypergraph w = harness::random_hypergraph(rng, 3, 20);
    LetterSet full = full_letter_set(3);
    std::uniform_int_distribution<std::uint64_t> pick(0, full);
    LetterSet y1 = pick(rng), y2 = pick(rng);
    CHECK(capacity(w, y1) == capacity(w, full & ~y1));
    CHECK(capacity(w, y1) + capacity(w, y2) >=
          capacity(w, y1 | y2) + capacity(w, y1 & y2));
  }
}

TEST_CASE("merged hypergraphs add capacities and degrees") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 100; ++i) {
    WhiteheadHypergraph a = harness::random_hypergraph(rng, 3, 10);
    WhiteheadHypergraph b = harness::random_hypergraph(rng, 3, 10);
    WhiteheadHypergraph m = merge_hypergraphs(a, b);
    CHECK(m.total_multiplicity() == a.total_multiplicity() + b.total_multiplicity());
    std::uniform_int_distribution<std::uint64_t> pick(0, full_letter_set(3));
    LetterSet y = pick(rng);
    CHECK(capacity(m, y) == capacity(a, y) + capacity(b, y));
    for (int g = 1; g <= 3; ++g)
      CHECK(degree(m, g) == degree(a, g) + degree(b, g));
  }
}

TEST_CASE("predicted_delta validates the cut") {
  WhiteheadHypergraph w = build_hypergraph(testdata::gamma1());
  CHECK_THROWS_AS(predicted_delta(w, 1, bits({2})), std::invalid_argument);
  CHECK_THROWS_AS(predicted_delta(w, 1, bits({1, -1})), std::invalid_argument);
  CHECK(predicted_delta(w, 1, bits({1})) == 0);  // identity move
}

TEST_CASE("hypergraph dump") {
  WhiteheadHypergraph w2 = build_hypergraph(circular_graph(
      CyclicWord(parse_word("abab")), 2));
  CHECK(dump_hypergraph(w2) == "A,b x2\na,B x2\n");
}

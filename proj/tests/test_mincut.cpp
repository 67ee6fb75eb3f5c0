#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "worked_examples.hpp"
#include "whmin/harness.hpp"
#include "whmin/mincut.hpp"

using namespace whmin;

namespace {

LetterSet bits(std::initializer_list<Letter> ls) {
  LetterSet s = 0;
  for (Letter a : ls) s |= letter_bit(a);
  return s;
}

}  // namespace

TEST_CASE("min cut on the rank-5 hypergraph") {
  WhiteheadHypergraph w = build_hypergraph(testdata::gamma_rank5());
  CutResult c = min_vcut(w, 1);
  CHECK(c.cap == 2);
  CHECK(brute_force_min_vcut(w, 1).cap == 2);
  CHECK(predicted_delta(w, 1, c.y) == -1);
}

TEST_CASE("best move for the cyclic word ab") {
  WhiteheadHypergraph w =
      build_hypergraph(circular_graph(CyclicWord(parse_word("ab")), 2));
  auto mv = best_whitehead_move(w);
  REQUIRE(mv.has_value());
  CHECK(mv->v == 1);
  CHECK(mv->y == bits({1, -2}));
  CHECK(mv->delta == -1);
}

TEST_CASE("no decreasing move for aa") {
  WhiteheadHypergraph w =
      build_hypergraph(circular_graph(CyclicWord(parse_word("aa")), 2));
  CHECK(!best_whitehead_move(w).has_value());
}

TEST_CASE("flow solver agrees with the exhaustive oracle") {
  harness::Rng rng(41);
  CHECK(harness::check_mincut_agreement(rng, 150, 4, 40) == 0);
}

TEST_CASE("witness is a valid minimum v-cut") {
  harness::Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    WhiteheadHypergraph w = harness::random_hypergraph(rng, 4, 25);
    std::uniform_int_distribution<int> lv(0, 7);
    Letter v = letter_from_index(lv(rng));
    CutResult c = min_vcut(w, v);
    CHECK((c.y & letter_bit(v)) != 0);
    CHECK((c.y & letter_bit(inverse(v))) == 0);
    CHECK(capacity(w, c.y) == c.cap);
    // minimality against an arbitrary competing cut
    CHECK(c.cap <= capacity(w, harness::random_vcut(rng, 4, v)));
  }
}

TEST_CASE("min cut is deterministic and repeatable") {
  harness::Rng rng(47);
  for (int i = 0; i < 50; ++i) {
    WhiteheadHypergraph w = harness::random_hypergraph(rng, 3, 15);
    CutResult a = min_vcut(w, 2);
    CutResult b = min_vcut(w, 2);
    CHECK(a.y == b.y);
    CHECK(a.cap == b.cap);
  }
}

TEST_CASE("parallel move search matches the sequential one") {
  harness::Rng rng(53);
  for (int i = 0; i < 50; ++i) {
    WhiteheadHypergraph w = harness::random_hypergraph(rng, 4, 25);
    auto seq = best_whitehead_move(w, 1);
    auto par = best_whitehead_move(w, 4);
    CHECK(seq.has_value() == par.has_value());
    if (seq && par) {
      CHECK(seq->v == par->v);
      CHECK(seq->y == par->y);
      CHECK(seq->delta == par->delta);
    }
  }
}

TEST_CASE("frozen letters are never chosen") {
  // hypergraph touching only a: any move must use v = a
  WhiteheadHypergraph w =
      build_hypergraph(circular_graph(CyclicWord(parse_word("aa")), 3));
  CHECK(degree(w, 2) == 0);
  CHECK(degree(w, 3) == 0);
  CHECK(!best_whitehead_move(w).has_value());
}

TEST_CASE("brute force rank guard") {
  WhiteheadHypergraph w;
  w.rank = 9;
  w.edges = {{bits({1, 2}), 1}};
  CHECK_THROWS_AS(brute_force_min_vcut(w, 1), std::invalid_argument);
}

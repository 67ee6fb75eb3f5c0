#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "worked_examples.hpp"
#include "whmin/harness.hpp"
#include "whmin/whitehead.hpp"

using namespace whmin;

TEST_CASE("second kind on letters") {
  // (a | a,b): b -> ba, b^-1 -> a^-1 b^-1, a and a^-1 fixed
  WhiteheadAut phi =
      WhiteheadAut::second_kind(1, letter_bit(1) | letter_bit(2), 2);
  CHECK(apply_to_letter(phi, 1) == parse_word("a"));
  CHECK(apply_to_letter(phi, -1) == parse_word("A"));
  CHECK(apply_to_letter(phi, 2) == parse_word("ba"));
  CHECK(apply_to_letter(phi, -2) == parse_word("AB"));

  // (a | a,b,B): b is conjugated
  WhiteheadAut conj = WhiteheadAut::second_kind(
      1, letter_bit(1) | letter_bit(2) | letter_bit(-2), 2);
  CHECK(apply_to_letter(conj, 2) == parse_word("Aba"));
  CHECK(apply_to_letter(conj, -2) == parse_word("ABa"));

  CHECK(WhiteheadAut::second_kind(1, letter_bit(1), 2).is_identity());
  CHECK(!phi.is_identity());
  CHECK_THROWS_AS(WhiteheadAut::second_kind(1, letter_bit(2), 2),
                  std::invalid_argument);  // v not in Y
  CHECK_THROWS_AS(
      WhiteheadAut::second_kind(1, letter_bit(1) | letter_bit(-1), 2),
      std::invalid_argument);  // v^-1 in Y
  CHECK_THROWS_AS(WhiteheadAut::second_kind(1, letter_bit(1) | letter_bit(3), 2),
                  std::invalid_argument);  // letter beyond the rank
}

TEST_CASE("second kind images have length at most 3") {
  std::mt19937_64 rng(3);
  for (const WhiteheadAut& phi : enumerate_second_kind(3)) {
    for (int i = 0; i < 2 * 3; ++i) {
      Letter a = letter_from_index(i);
      Word img = apply_to_letter(phi, a);
      CHECK(img.size() >= 1);
      CHECK(img.size() <= 3);
      CHECK(invert_word(apply_to_letter(phi, inverse(a))) == img);
    }
  }
}

TEST_CASE("first kind is length preserving") {
  WhiteheadAut sw = WhiteheadAut::first_kind({2, 1}, {1, -1});
  CHECK(apply_to_letter(sw, 1) == parse_word("b"));
  CHECK(apply_to_letter(sw, 2) == parse_word("A"));
  CHECK(apply_to_letter(sw, -2) == parse_word("a"));
  CHECK(apply_to_word(sw, parse_word("abAB")) == parse_word("bABa"));
  CHECK_THROWS_AS(WhiteheadAut::first_kind({1, 1}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(WhiteheadAut::first_kind({1, 2}, {1, 2}), std::invalid_argument);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> len(0, 20);
  for (int i = 0; i < 100; ++i) {
    Word u = harness::random_reduced_word(rng, 2, len(rng));
    CHECK(apply_to_word(sw, u).size() == u.size());
  }
}

TEST_CASE("second kind enumeration") {
  CHECK(enumerate_second_kind(1).empty());
  CHECK(enumerate_second_kind(2).size() == 12);  // 2r(2^(2r-2)-1)
  CHECK(enumerate_second_kind(3).size() == 90);
  for (int rank : {2, 3}) {
    std::set<std::pair<Letter, LetterSet>> seen;
    for (const WhiteheadAut& phi : enumerate_second_kind(rank)) {
      CHECK(!phi.is_identity());
      CHECK(seen.insert({phi.v, phi.cut}).second);
    }
  }
  CHECK_THROWS_AS(enumerate_second_kind(9), std::invalid_argument);
}

TEST_CASE("substitution on the 3-vertex graph: a->bA, b->baB") {
  std::vector<Word> images{parse_word("bA"), parse_word("baB")};
  PointedAGraph bullet = apply_substitution(images, {testdata::gamma1(), 0});
  CHECK(bullet.size() == 5);
  AGraph cyc = apply_substitution_cyclic(images, testdata::gamma1());
  CHECK(cyc.size() == 4);
  CHECK(cyc.is_cyclically_reduced());
}

TEST_CASE("pointed application matches the word action") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> len(1, 8), nw(1, 3);
  std::vector<WhiteheadAut> auts = enumerate_second_kind(2);
  std::uniform_int_distribution<std::size_t> pick(0, auts.size() - 1);
  for (int i = 0; i < 100; ++i) {
    std::vector<Word> gens;
    int m = nw(rng);
    for (int k = 0; k < m; ++k)
      gens.push_back(harness::random_reduced_word(rng, 2, len(rng)));
    const WhiteheadAut& phi = auts[pick(rng)];
    std::vector<Word> images;
    for (const Word& g : gens) images.push_back(apply_to_word(phi, g));
    CHECK(pointed_normal_form(apply_to_pointed_graph(phi, stallings_graph(gens, 2))) ==
          pointed_normal_form(stallings_graph(images, 2)));
  }
}

TEST_CASE("cyclic application matches the cyclic word action") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> len(1, 10);
  std::vector<WhiteheadAut> auts = enumerate_second_kind(2);
  std::uniform_int_distribution<std::size_t> pick(0, auts.size() - 1);
  for (int i = 0; i < 100; ++i) {
    CyclicWord w = harness::random_cyclic_word(rng, 2, len(rng));
    const WhiteheadAut& phi = auts[pick(rng)];
    CyclicWord img = cyclic_core_word(apply_to_word(phi, Word(w.letters))).second;
    CHECK(graph_normal_form(apply_to_cyclic_graph(phi, circular_graph(w, 2))) ==
          graph_normal_form(circular_graph(img, 2)));
  }
}

TEST_CASE("trace application and composition") {
  WhiteheadAut phi =
      WhiteheadAut::second_kind(1, letter_bit(1) | letter_bit(2), 2);
  MinimizationTrace trace{{std::nullopt, parse_word("a")}, {phi, parse_word("b")}};
  Word u = parse_word("ab");
  Word expect = u;
  expect = concat(concat(parse_word("A"), expect), parse_word("a"));
  expect = concat(concat(parse_word("B"), apply_to_word(phi, expect)), parse_word("b"));
  CHECK(apply_trace(trace, u) == expect);

  std::vector<Word> comp = compose_trace(trace, 2);
  Word via_comp;
  for (Letter a : u.letters)
    via_comp = concat(via_comp, a > 0 ? comp[a - 1] : invert_word(comp[-a - 1]));
  CHECK(via_comp == expect);
}

TEST_CASE("aut text form") {
  WhiteheadAut phi =
      WhiteheadAut::second_kind(1, letter_bit(1) | letter_bit(-2), 2);
  CHECK(format_aut(phi) == "(a | a,B)");
  WhiteheadAut sw = WhiteheadAut::first_kind({2, 1}, {1, -1});
  CHECK(format_aut(sw) == "perm: a->b,b->a; signs: +,-");
}

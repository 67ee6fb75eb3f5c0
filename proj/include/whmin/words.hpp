#pragma once

// Letters, words and cyclic words over a rank-r free group basis.
//
// A letter is a nonzero signed integer: k stands for the k-th generator,
// -k for its inverse.  The symmetrized alphabet has 2r letters, ordered
// a < a^-1 < b < b^-1 < ... via letter_index().

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace whmin {

using Letter = int;

inline Letter inverse(Letter a) { return -a; }

// Position of a letter in the fixed order a < A < b < B < ...
inline int letter_index(Letter a) {
  return a > 0 ? 2 * (a - 1) : 2 * (-a) - 1;
}

inline Letter letter_from_index(int idx) {
  return (idx % 2 == 0) ? idx / 2 + 1 : -(idx / 2 + 1);
}

inline void check_letter(Letter a, int rank) {
  if (a == 0 || a > rank || a < -rank)
    throw std::invalid_argument("letter " + std::to_string(a) +
                                " out of range for rank " + std::to_string(rank));
}

struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Letter operator[](std::size_t i) const { return letters[i]; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return std::lexicographical_compare_three_way(
        a.letters.begin(), a.letters.end(), b.letters.begin(), b.letters.end(),
        [](Letter x, Letter y) { return letter_index(x) <=> letter_index(y); });
  }
};

// Free reduction: cancel adjacent (x, x^-1) pairs.  Idempotent.
inline Word reduce_word(const std::vector<Letter>& raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter a : raw) {
    if (a == 0) throw std::invalid_argument("0 is not a letter");
    if (!out.empty() && out.back() == inverse(a))
      out.pop_back();
    else
      out.push_back(a);
  }
  return Word(std::move(out));
}

inline Word reduce_word(const Word& w) { return reduce_word(w.letters); }

inline Word invert_word(const Word& u) {
  std::vector<Letter> out(u.letters.rbegin(), u.letters.rend());
  for (Letter& a : out) a = inverse(a);
  return Word(std::move(out));
}

inline Word concat(const Word& a, const Word& b) {
  std::vector<Letter> raw = a.letters;
  raw.insert(raw.end(), b.letters.begin(), b.letters.end());
  return reduce_word(raw);
}

inline bool is_reduced(const std::vector<Letter>& ls) {
  for (std::size_t i = 1; i < ls.size(); ++i)
    if (ls[i] == inverse(ls[i - 1])) return false;
  return true;
}

inline bool is_cyclically_reduced(const std::vector<Letter>& ls) {
  if (!is_reduced(ls)) return false;
  if (ls.size() >= 2 && ls.back() == inverse(ls.front())) return false;
  return true;
}

// A cyclically reduced word stored in its lexicographically least rotation,
// so equality is rotation-invariant.
struct CyclicWord {
  std::vector<Letter> letters;

  CyclicWord() = default;
  explicit CyclicWord(const Word& w) : CyclicWord(w.letters) {}
  explicit CyclicWord(std::vector<Letter> ls) {
    if (!is_cyclically_reduced(ls))
      throw std::invalid_argument("word is not cyclically reduced");
    letters = least_rotation(std::move(ls));
  }

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord& a, const CyclicWord& b) {
    return std::lexicographical_compare_three_way(
        a.letters.begin(), a.letters.end(), b.letters.begin(), b.letters.end(),
        [](Letter x, Letter y) { return letter_index(x) <=> letter_index(y); });
  }

 private:
  static std::vector<Letter> least_rotation(std::vector<Letter> ls) {
    if (ls.size() < 2) return ls;
    auto less_rot = [&](std::size_t i, std::size_t j) {
      for (std::size_t k = 0; k < ls.size(); ++k) {
        int li = letter_index(ls[(i + k) % ls.size()]);
        int lj = letter_index(ls[(j + k) % ls.size()]);
        if (li != lj) return li < lj;
      }
      return false;
    };
    std::size_t best = 0;
    for (std::size_t i = 1; i < ls.size(); ++i)
      if (less_rot(i, best)) best = i;
    std::rotate(ls.begin(), ls.begin() + best, ls.end());
    return ls;
  }
};

// Splits a reduced word as u = v w v^-1 with w cyclically reduced and v the
// shortest such prefix.
inline std::pair<Word, CyclicWord> cyclic_core_word(const Word& u) {
  if (!is_reduced(u.letters)) throw std::invalid_argument("word not reduced");
  std::size_t lo = 0, hi = u.size();
  while (hi - lo >= 2 && u.letters[hi - 1] == inverse(u.letters[lo])) {
    ++lo;
    --hi;
  }
  Word v(std::vector<Letter>(u.letters.begin(), u.letters.begin() + lo));
  std::vector<Letter> core(u.letters.begin() + lo, u.letters.begin() + hi);
  return {std::move(v), CyclicWord(std::move(core))};
}

// --- text rendering -------------------------------------------------------
//
// Generators 1..26 print as a..z, their inverses as A..Z.  Beyond rank 26
// every generator prints as xK (inverse XK).

inline std::string format_letter(Letter a, int rank = 26) {
  int g = a > 0 ? a : -a;
  if (rank <= 26 && g <= 26) {
    char c = static_cast<char>((a > 0 ? 'a' : 'A') + g - 1);
    return std::string(1, c);
  }
  return (a > 0 ? "x" : "X") + std::to_string(g);
}

inline std::string format_word(const Word& w, int rank = 26) {
  if (w.empty()) return "1";
  std::string s;
  for (Letter a : w.letters) s += format_letter(a, rank);
  return s;
}

inline std::string format_word(const CyclicWord& w, int rank = 26) {
  return format_word(Word(w.letters), rank);
}

// Parses the textual word syntax.  "1" or "" denote the empty word.
// With strict=true, non-reduced input is rejected instead of auto-reduced.
inline Word parse_word(const std::string& text, bool strict = false) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '1' && text.size() == 1) return Word{};
    if (c == 'x' || c == 'X') {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j > i + 1) {
        int g = std::stoi(text.substr(i + 1, j - i - 1));
        if (g == 0) throw std::invalid_argument("bad generator index in '" + text + "'");
        raw.push_back(c == 'x' ? g : -g);
        i = j;
        continue;
      }
    }
    if (c >= 'a' && c <= 'z')
      raw.push_back(c - 'a' + 1);
    else if (c >= 'A' && c <= 'Z')
      raw.push_back(-(c - 'A' + 1));
    else
      throw std::invalid_argument(std::string("unexpected character '") + c +
                                  "' in word '" + text + "'");
    ++i;
  }
  if (strict && !is_reduced(raw))
    throw std::invalid_argument("word '" + text + "' is not freely reduced");
  return reduce_word(raw);
}

// Smallest rank covering all letters of a word.
inline int min_rank(const Word& w) {
  int r = 0;
  for (Letter a : w.letters) r = std::max(r, a > 0 ? a : -a);
  return r;
}

}  // namespace whmin

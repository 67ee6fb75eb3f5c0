#pragma once

// Primitivity and free-factor deciders on top of the minimizer.

#include "whmin/minimize.hpp"

namespace whmin {

struct Verdict {
  bool yes = false;
  MinimizationResult minimization;  // witness trace and minimal object
};

// A word is primitive iff the minimum length in its automorphic orbit is 1.
// The empty word is rejected.
inline Verdict is_primitive(const Word& u, int rank, int max_threads = 1) {
  if (u.empty()) throw std::invalid_argument("is_primitive: empty word");
  Verdict v;
  v.minimization = minimize_word(u, rank, max_threads);
  v.yes = v.minimization.final_size() == 1;
  return v;
}

// A subgroup is a free factor iff the minimum size in its automorphic orbit
// is 1.  The trivial subgroup is (vacuously) a free factor.
inline Verdict is_free_factor(const std::vector<Word>& gens, int rank,
                              int max_threads = 1) {
  Verdict v;
  v.minimization = minimize_subgroup(gens, rank, max_threads);
  v.yes = v.minimization.final_size() == 1;
  return v;
}

}  // namespace whmin

#pragma once

#include <random>

#include "epilat/term.hpp"

// Random unary-semigroup terms for property tests.
namespace gen {

inline epilat::Term term(std::mt19937& rng, int letters, int budget, int depth) {
  static const char* names[] = {"x", "y", "z", "t"};
  std::vector<epilat::Factor> fs;
  const int n = 1 + static_cast<int>(rng() % std::max(1, budget));
  for (int i = 0; i < n; ++i) {
    if (depth > 0 && rng() % 4 == 0) {
      epilat::Term arg = term(rng, letters, std::max(1, budget / 2), depth - 1);
      fs.push_back(epilat::Factor{"", arg.factors()});
    } else {
      fs.push_back(epilat::Factor{names[rng() % letters], {}});
    }
  }
  return epilat::Term(std::move(fs));
}

} // namespace gen

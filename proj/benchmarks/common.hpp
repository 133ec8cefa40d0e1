#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "possmc/gpks.hpp"

namespace bench {

inline possmc::Poss grid_value(std::mt19937_64& rng) {
  static const char* kValues[] = {"0", "0.3", "0.5", "0.7", "1"};
  return possmc::parse_poss(kValues[rng() % 5]);
}

inline possmc::FuzzyMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  possmc::FuzzyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = grid_value(rng);
  }
  return m;
}

inline possmc::FuzzyVector random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  possmc::FuzzyVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = grid_value(rng);
  return v;
}

// Ring with random chords, every row total.
inline possmc::Gpks random_model(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> states;
  for (std::size_t i = 0; i < n; ++i) states.push_back("s" + std::to_string(i));
  possmc::FuzzyMatrix p(n, n);
  possmc::FuzzyMatrix labels(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    p(i, (i + 1) % n) = possmc::Poss::one();
    p(i, rng() % n) = grid_value(rng);
    labels(i, 0) = grid_value(rng);
  }
  return possmc::Gpks(states, {"a"}, p, possmc::FuzzyVector::indicator(n, 0), labels);
}

}  // namespace bench

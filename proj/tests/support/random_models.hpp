#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "possmc/automaton.hpp"
#include "possmc/formula.hpp"
#include "possmc/gpks.hpp"
#include "possmc/letter.hpp"

namespace possmc::testing {

/// {0, 0.3, 0.5, 0.7, 1}
const std::vector<Poss>& value_grid();

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  std::size_t uniform(std::size_t lo, std::size_t hi);
  bool coin(double p = 0.5);
  Poss value();
  Poss positive_value();

  /// Total model with 1..max_out successors per state over props a, b.
  /// `normal` forces every row and the initial distribution to attain 1.
  Gpks model(std::size_t states, std::size_t max_out = 2, bool normal = false);
  FuzzyVector fuzzy_state(std::size_t n);

  /// Deterministic over every letter on props {a, b}: each state maps each
  /// guard region to one successor with value 1. F(q0) dominates F.
  FuzzyAutomaton deterministic_finite(std::size_t states);
  FuzzyAutomaton buchi(std::size_t states);
  FuzzyAutomaton finite(std::size_t states);

  Formula formula(std::size_t depth, const std::vector<std::string>& atoms);
  /// State expression over the atoms, depth <= 2.
  Formula state_expression(const std::vector<std::string>& atoms, std::size_t depth = 2);
  Letter letter(const std::vector<std::string>& atoms);
  UltimatelyPeriodicWord word(const std::vector<std::string>& atoms, std::size_t max_prefix,
                              std::size_t max_period);
  LassoPath lasso(const Gpks& model, std::size_t max_prefix, std::size_t max_cycle);

 private:
  Guard random_guard();
  std::mt19937_64 rng_;
};

}  // namespace possmc::testing

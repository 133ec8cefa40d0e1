#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "possmc/automaton.hpp"
#include "possmc/gpks.hpp"

namespace possmc {

/// M (x) A. Pair (s, q) has index s * |Q| + q and is named "s|q"; every
/// pair state is labelled crisply by its own name.
struct ProductGpks {
  Gpks model;
  std::size_t model_states = 0;
  std::size_t automaton_states = 0;
  /// B(s, q) = F(q).
  FuzzyVector accepting;

  std::size_t index(std::size_t s, std::size_t q) const { return s * automaton_states + q; }
  std::pair<std::size_t, std::size_t> split(std::size_t i) const {
    return {i / automaton_states, i % automaton_states};
  }
};

/// Throws ApMismatch when the automaton uses propositions the model lacks.
ProductGpks product(const Gpks& model, const FuzzyAutomaton& a);

/// q_s = delta(q0, L(s)) for a deterministic automaton. Throws
/// NotDeterministic.
std::size_t start_automaton_state(const Gpks& model, const FuzzyAutomaton& a, std::size_t s);

/// Po of a regular safety property given by an automaton for its good
/// prefixes: G B on the product at (s, q_s). Throws WrongMode,
/// NotDeterministic, UnknownState.
Poss safety_possibility(const Gpks& model, const FuzzyAutomaton& a, std::size_t s);

/// 1 - Po((s, q_s) |= F not B).
Poss safety_necessity(const Gpks& model, const FuzzyAutomaton& a, std::size_t s);

/// Po of the omega-regular property accepted by a Buchi automaton: G F B on
/// the product, aggregated over I'. With a state the model is first rebased
/// at it; for deterministic automata the (s, q_s) entry is cross-checked.
/// Throws WrongMode, UnknownState.
Poss omega_possibility(const Gpks& model, const FuzzyAutomaton& a,
                       std::optional<std::size_t> state = std::nullopt);

/// 1 - Po(I' |= F G not B) on the (rebased) product.
Poss omega_necessity(const Gpks& model, const FuzzyAutomaton& a,
                     std::optional<std::size_t> state = std::nullopt);

enum class PropertyKind { Safety, Omega };

struct CheckReport {
  PropertyKind kind = PropertyKind::Safety;
  std::string automaton;
  std::optional<std::size_t> state;
  Poss possibility;
  Poss necessity;
  ProductGpks product;
  /// Index of (s, q_s) in the product when defined.
  std::optional<std::size_t> product_state;
};

CheckReport safety_check(const Gpks& model, const FuzzyAutomaton& a, std::size_t s);
CheckReport omega_check(const Gpks& model, const FuzzyAutomaton& a,
                        std::optional<std::size_t> state = std::nullopt);

}  // namespace possmc

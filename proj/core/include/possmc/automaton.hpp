#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "possmc/gpks.hpp"
#include "possmc/guard.hpp"
#include "possmc/letter.hpp"
#include "possmc/matrix.hpp"

namespace possmc {

enum class AcceptanceMode { FiniteWord, Buchi };

std::string to_string(AcceptanceMode mode);

struct GuardedTransition {
  std::size_t from = 0;
  std::size_t to = 0;
  Guard guard;
  Poss value = Poss::one();
};

/// Fuzzy automaton over the letters l^AP with guard-labelled transitions.
struct FuzzyAutomaton {
  std::string name;
  std::vector<std::string> states;
  std::vector<std::string> ap;
  FuzzyVector initial;  // J
  FuzzyVector final;    // F
  std::vector<GuardedTransition> transitions;
  AcceptanceMode mode = AcceptanceMode::FiniteWord;
  /// Letters added to the model alphabet when checking determinism.
  std::vector<Letter> extra_letters;

  std::size_t size() const noexcept { return states.size(); }
  std::optional<std::size_t> find_state(std::string_view state) const;
  /// Throws UnknownState.
  std::size_t state_index(std::string_view state) const;
};

/// Throws DimensionMismatch, UnknownState or UnknownAtom when J, F, transition
/// endpoints or guard propositions are inconsistent with the declarations.
void check_automaton(const FuzzyAutomaton& a);

/// Max of the values of transitions q -> q2 whose guard accepts the letter.
Poss delta(const FuzzyAutomaton& a, std::size_t q, const Letter& letter, std::size_t q2);

/// delta(., letter, .) as a |Q| x |Q| matrix.
FuzzyMatrix delta_matrix(const FuzzyAutomaton& a, const Letter& letter);

/// Max-min vector propagation from J. Throws WrongMode.
Poss accept_finite(const FuzzyAutomaton& a, const std::vector<Letter>& word);

/// Unique J=1 initial state with all other entries 0, and for every state and
/// letter a unique delta=1 successor with all others 0.
bool is_deterministic(const FuzzyAutomaton& a, const std::vector<Letter>& alphabet);

/// The unique state with J = 1 when J is crisp with one nonzero entry.
std::optional<std::size_t> deterministic_initial(const FuzzyAutomaton& a);

/// The unique delta=1 successor. Throws NotDeterministic otherwise.
std::size_t det_successor(const FuzzyAutomaton& a, std::size_t q, const Letter& letter);

/// Degree to which the Buchi automaton accepts the word, by cut levels.
/// Throws WrongMode.
Poss accept_omega(const FuzzyAutomaton& a, const UltimatelyPeriodicWord& w);

/// Distinct letters of the model's states followed by the automaton's extra
/// letters, restricted to the automaton's propositions.
std::vector<Letter> model_alphabet(const Gpks& model, const FuzzyAutomaton& a);

/// Restriction of a letter to the given propositions.
Letter restrict_letter(const Letter& letter, const std::vector<std::string>& ap);

}  // namespace possmc

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "possmc/formula.hpp"
#include "possmc/letter.hpp"
#include "possmc/matrix.hpp"

namespace possmc {

/// Generalized possibilistic Kripke structure (S, P, I, AP, L). Vectors and
/// matrices are indexed by declaration order of `states` and `ap`.
class Gpks {
 public:
  Gpks() = default;
  /// Checks only that dimensions agree (DimensionMismatch); the remaining
  /// well-formedness rules are reported by validate().
  Gpks(std::vector<std::string> states, std::vector<std::string> ap,
       FuzzyMatrix transitions, FuzzyVector initial, FuzzyMatrix labels);

  const std::vector<std::string>& states() const noexcept { return states_; }
  const std::vector<std::string>& ap() const noexcept { return ap_; }
  const FuzzyMatrix& transitions() const noexcept { return trans_; }
  const FuzzyVector& initial() const noexcept { return initial_; }
  const FuzzyMatrix& labels() const noexcept { return labels_; }

  std::size_t size() const noexcept { return states_.size(); }
  Poss transition(std::size_t s, std::size_t t) const { return trans_(s, t); }
  Poss label(std::size_t s, std::size_t a) const { return labels_(s, a); }

  std::optional<std::size_t> find_state(std::string_view name) const;
  std::optional<std::size_t> find_ap(std::string_view name) const;
  /// Throws UnknownState.
  std::size_t state_index(std::string_view name) const;

 private:
  std::vector<std::string> states_;
  std::vector<std::string> ap_;
  FuzzyMatrix trans_;
  FuzzyVector initial_;
  FuzzyMatrix labels_;
};

struct Violation {
  std::string code;     // e.g. "terminal-state"
  std::string subject;  // state / proposition / entry the violation concerns
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Empty iff the model is well formed: nonempty unique state names, unique
/// proposition names, and every state has a successor of positive possibility.
std::vector<Violation> validate(const Gpks& model);

/// Informational: every label entry is 0 or 1.
bool has_crisp_labels(const Gpks& model);

/// Every row of P and the initial distribution attain 1. Labels are not
/// inspected.
bool is_normal(const Gpks& model);

/// Supremum of path possibilities per start state for an arbitrary square
/// transition matrix: r(s) = max_t min(Q+(s,t), Q+(t,t)).
FuzzyVector path_supremum(const FuzzyMatrix& q);

/// r_P of the model.
FuzzyVector r_p(const Gpks& model);

/// Finite presentation prefix . cycle^omega of an infinite path.
struct LassoPath {
  std::vector<std::size_t> prefix;
  std::vector<std::size_t> cycle;

  std::size_t first() const { return prefix.empty() ? cycle.front() : prefix.front(); }
  std::size_t length() const noexcept { return prefix.size() + cycle.size(); }
  std::size_t at(std::size_t pos) const {
    return pos < prefix.size() ? prefix[pos] : cycle[pos - prefix.size()];
  }

  friend bool operator==(const LassoPath&, const LassoPath&) = default;
};

/// Throws InvalidLasso when the cycle is empty, an index is out of range, or a
/// step (including the cycle-closing one) has possibility 0.
void check_lasso(const Gpks& model, const LassoPath& path);

/// I(s0) min all transition possibilities along the path.
Poss path_possibility(const Gpks& model, const LassoPath& path);

/// Po(Cyl(s0...sn)) = I(s0) min P along the fragment min r_P(sn).
/// Throws EmptyFragment.
Poss cylinder_possibility(const Gpks& model, const std::vector<std::size_t>& fragment);

/// max_s min(I(s), r_P(s)).
Poss total_possibility(const Gpks& model);

/// Same model with `state` as the unique, fully possible initial state.
Gpks rebase_initial(const Gpks& model, std::size_t state);
Gpks rebase_initial(const Gpks& model, std::string_view state);

/// a -> L(s, a).
Letter letter_of(const Gpks& model, std::size_t state);

/// The trace of a lasso as an ultimately periodic word.
UltimatelyPeriodicWord trace(const Gpks& model, const LassoPath& path);

/// Pointwise value of a propositional formula over the labels: atoms read
/// L(s,a), connectives are min / max / 1-x. Throws UnknownAtom, and
/// UnsupportedFormula when a temporal operator occurs.
FuzzyVector state_expression_eval(const Gpks& model, const Formula& expr);

}  // namespace possmc

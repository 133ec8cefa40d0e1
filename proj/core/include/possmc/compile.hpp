#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "possmc/formula.hpp"
#include "possmc/gpks.hpp"
#include "possmc/patterns.hpp"

namespace possmc {

/// A formula recognised as X^shift applied to a closed-form pattern whose
/// arguments are state expressions.
struct CompiledPattern {
  PatternKind kind = PatternKind::State;
  std::optional<Formula> left;  // until forms only
  Formula right = Formula::tt();
  unsigned bound = 0;
  unsigned shift = 0;

  std::string to_string() const;
};

/// Negations are pushed through F, G and X, X is lifted outward and
/// `true U` collapses to F before matching. Returns nullopt for shapes
/// without a closed form.
std::optional<CompiledPattern> compile_pattern(const Formula& phi);

/// The rewritten formula compile_pattern matches against.
Formula normalize_formula(const Formula& phi);

/// Evaluates the state expressions of `pattern` over the model's labels.
PatternSpec bind_pattern(const Gpks& model, const CompiledPattern& pattern);

/// Po or Ne of phi for every state. Throws UnsupportedFormula when phi has
/// no closed form and NoClosedDual for necessity of until-like patterns.
FuzzyVector check_vector(const Gpks& model, const Formula& phi, Measure measure);

Poss check_state(const Gpks& model, const Formula& phi, std::size_t state, Measure measure);

}  // namespace possmc

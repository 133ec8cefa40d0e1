#pragma once

#include <string>

#include "possmc/gpks.hpp"
#include "possmc/matrix.hpp"

namespace possmc {

// Closed-form possibility vectors over fuzzy states. Every function returns
// the vector (Po(s |= pattern))_s and throws DimensionMismatch when an
// argument is not indexed by the model's states.

/// Po(B) for a pattern without temporal operators: min(B, r_P).
FuzzyVector state_value(const Gpks& model, const FuzzyVector& b);

/// Po(F B) = P* o D_B o r_P.
FuzzyVector eventually(const Gpks& model, const FuzzyVector& b);

/// Po(G B): greatest fixed point of Z -> B min P o D_Z o r_P, iterated down
/// from the all-ones vector.
FuzzyVector always(const Gpks& model, const FuzzyVector& b);

/// Po(C U<=n B) = join_{i=0..n} (D_C o P)^i o D_B o r_P.
FuzzyVector bounded_until(const Gpks& model, const FuzzyVector& c, const FuzzyVector& b,
                          unsigned n);

/// Po(C U B) = (D_C o P)* o D_B o r_P.
FuzzyVector until(const Gpks& model, const FuzzyVector& c, const FuzzyVector& b);

/// Po(G F B) = P+ o diag(P+(t,t)) o B.
FuzzyVector repeated_reachability(const Gpks& model, const FuzzyVector& b);

/// Po(F G B) = P* o r_{D_B o P}.
FuzzyVector persistence(const Gpks& model, const FuzzyVector& b);

/// P^k o v, the value of X^k in front of a pattern.
FuzzyVector next_shift(const Gpks& model, const FuzzyVector& v, unsigned k);

/// Po(F<=n B) = bounded_until with C = all ones.
FuzzyVector bounded_eventually(const Gpks& model, const FuzzyVector& b, unsigned n);

/// max_s min(I(s), v(s)).
Poss aggregate_initial(const Gpks& model, const FuzzyVector& v);

enum class PatternKind {
  State,
  Eventually,
  BoundedEventually,
  Always,
  Until,
  BoundedUntil,
  RepeatedReachability,
  Persistence,
};

std::string to_string(PatternKind kind);

/// X^shift applied to one closed-form pattern over fuzzy states. `left` is
/// only meaningful for (bounded) until; `bound` only for bounded forms.
struct PatternSpec {
  PatternKind kind = PatternKind::State;
  FuzzyVector left;
  FuzzyVector right;
  unsigned bound = 0;
  unsigned shift = 0;
};

FuzzyVector possibility_of(const Gpks& model, const PatternSpec& pattern);

/// 1 - Po(s |= not pattern), using the pointwise dual pattern
/// (not F = G not, not G F = F G not, not X = X not, ...). Throws NoClosedDual
/// for until, bounded until and bounded eventually.
FuzzyVector necessity_of(const Gpks& model, const PatternSpec& pattern);

struct PatternResult {
  FuzzyVector per_state;
  Poss initial;
  std::string descriptor;
};

enum class Measure { Possibility, Necessity };

/// Vector plus its aggregation over the initial distribution. For necessity
/// the aggregate is 1 - Po(I |= not pattern).
PatternResult evaluate_pattern(const Gpks& model, const PatternSpec& pattern, Measure measure);

}  // namespace possmc

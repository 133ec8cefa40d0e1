#include "possmc/patterns.hpp"

#include <algorithm>
#include <set>

#include "possmc/error.hpp"

namespace possmc {

namespace {

void require_state_vector(const Gpks& model, const FuzzyVector& v, const char* what) {
  if (v.size() != model.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + " has " + std::to_string(v.size()) +
                    " entries, model has " + std::to_string(model.size()) + " states");
  }
}

}  // namespace

FuzzyVector state_value(const Gpks& model, const FuzzyVector& b) {
  require_state_vector(model, b, "fuzzy state");
  return meet(b, r_p(model));
}

FuzzyVector eventually(const Gpks& model, const FuzzyVector& b) {
  require_state_vector(model, b, "fuzzy state");
  const FuzzyMatrix star = reflexive_transitive_closure(model.transitions());
  return compose(star, meet(b, r_p(model)));
}

FuzzyVector always(const Gpks& model, const FuzzyVector& b) {
  require_state_vector(model, b, "fuzzy state");
  const FuzzyMatrix& p = model.transitions();
  const FuzzyVector r = r_p(model);

  std::set<Poss> levels(b.begin(), b.end());
  levels.insert(p.entries().begin(), p.entries().end());
  levels.insert(r.begin(), r.end());
  levels.insert(Poss::zero());
  levels.insert(Poss::one());
  // Each non-final step lowers at least one entry by at least one level.
  const std::size_t max_steps = levels.size() * model.size() + 1;

  FuzzyVector z = FuzzyVector::ones(model.size());
  for (std::size_t step = 0; step <= max_steps; ++step) {
    FuzzyVector next = meet(b, compose(p, meet(z, r)));
    if (next == z) return z;
    z = std::move(next);
  }
  throw Error(ErrorKind::Internal, "greatest fixed point iteration did not stabilise");
}

FuzzyVector bounded_until(const Gpks& model, const FuzzyVector& c, const FuzzyVector& b,
                          unsigned n) {
  require_state_vector(model, c, "constraint fuzzy state");
  require_state_vector(model, b, "target fuzzy state");
  const FuzzyMatrix step = compose(diagonal(c), model.transitions());
  // term_i = (D_C o P)^i o D_B o r_P, accumulated right to left.
  FuzzyVector term = meet(b, r_p(model));
  FuzzyVector acc = term;
  // Walks of length >= |S| contain a cycle whose removal cannot lower the
  // minimum, so terms beyond |S|-1 add nothing.
  const std::size_t last = std::min<std::size_t>(n, model.size() > 0 ? model.size() - 1 : 0);
  for (std::size_t i = 1; i <= last; ++i) {
    term = compose(step, term);
    acc = join(acc, term);
  }
  return acc;
}

FuzzyVector until(const Gpks& model, const FuzzyVector& c, const FuzzyVector& b) {
  require_state_vector(model, c, "constraint fuzzy state");
  require_state_vector(model, b, "target fuzzy state");
  const FuzzyMatrix star =
      reflexive_transitive_closure(compose(diagonal(c), model.transitions()));
  return compose(star, meet(b, r_p(model)));
}

FuzzyVector repeated_reachability(const Gpks& model, const FuzzyVector& b) {
  require_state_vector(model, b, "fuzzy state");
  const FuzzyMatrix plus = transitive_closure(model.transitions());
  return compose(plus, meet(plus.diagonal_entries(), b));
}

FuzzyVector persistence(const Gpks& model, const FuzzyVector& b) {
  require_state_vector(model, b, "fuzzy state");
  const FuzzyVector r_restricted = path_supremum(compose(diagonal(b), model.transitions()));
  return compose(reflexive_transitive_closure(model.transitions()), r_restricted);
}

FuzzyVector next_shift(const Gpks& model, const FuzzyVector& v, unsigned k) {
  require_state_vector(model, v, "vector");
  FuzzyVector out = v;
  for (unsigned i = 0; i < k; ++i) out = compose(model.transitions(), out);
  return out;
}

FuzzyVector bounded_eventually(const Gpks& model, const FuzzyVector& b, unsigned n) {
  return bounded_until(model, FuzzyVector::ones(model.size()), b, n);
}

Poss aggregate_initial(const Gpks& model, const FuzzyVector& v) {
  require_state_vector(model, v, "vector");
  return compose(model.initial(), v);
}

std::string to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::State: return "state";
    case PatternKind::Eventually: return "eventually";
    case PatternKind::BoundedEventually: return "bounded-eventually";
    case PatternKind::Always: return "always";
    case PatternKind::Until: return "until";
    case PatternKind::BoundedUntil: return "bounded-until";
    case PatternKind::RepeatedReachability: return "repeated-reachability";
    case PatternKind::Persistence: return "persistence";
  }
  return "?";
}

FuzzyVector possibility_of(const Gpks& model, const PatternSpec& pattern) {
  FuzzyVector core;
  switch (pattern.kind) {
    case PatternKind::State: core = state_value(model, pattern.right); break;
    case PatternKind::Eventually: core = eventually(model, pattern.right); break;
    case PatternKind::BoundedEventually:
      core = bounded_eventually(model, pattern.right, pattern.bound);
      break;
    case PatternKind::Always: core = always(model, pattern.right); break;
    case PatternKind::Until: core = until(model, pattern.left, pattern.right); break;
    case PatternKind::BoundedUntil:
      core = bounded_until(model, pattern.left, pattern.right, pattern.bound);
      break;
    case PatternKind::RepeatedReachability:
      core = repeated_reachability(model, pattern.right);
      break;
    case PatternKind::Persistence: core = persistence(model, pattern.right); break;
  }
  return next_shift(model, core, pattern.shift);
}

FuzzyVector necessity_of(const Gpks& model, const PatternSpec& pattern) {
  PatternSpec dual = pattern;
  dual.right = complement(pattern.right);
  switch (pattern.kind) {
    case PatternKind::State: break;
    case PatternKind::Eventually: dual.kind = PatternKind::Always; break;
    case PatternKind::Always: dual.kind = PatternKind::Eventually; break;
    case PatternKind::RepeatedReachability: dual.kind = PatternKind::Persistence; break;
    case PatternKind::Persistence: dual.kind = PatternKind::RepeatedReachability; break;
    case PatternKind::Until:
    case PatternKind::BoundedUntil:
    case PatternKind::BoundedEventually:
      throw Error(ErrorKind::NoClosedDual,
                  "no closed-form necessity for " + to_string(pattern.kind));
  }
  return complement(possibility_of(model, dual));
}

PatternResult evaluate_pattern(const Gpks& model, const PatternSpec& pattern, Measure measure) {
  PatternResult result;
  result.descriptor = (pattern.shift > 0 ? "X^" + std::to_string(pattern.shift) + " " : "") +
                      to_string(pattern.kind);
  if (pattern.kind == PatternKind::BoundedUntil || pattern.kind == PatternKind::BoundedEventually) {
    result.descriptor += "(n=" + std::to_string(pattern.bound) + ")";
  }
  if (measure == Measure::Possibility) {
    result.per_state = possibility_of(model, pattern);
    result.initial = aggregate_initial(model, result.per_state);
  } else {
    result.per_state = necessity_of(model, pattern);
    result.initial = complement(aggregate_initial(model, complement(result.per_state)));
  }
  return result;
}

}  // namespace possmc

#include "possmc/compile.hpp"

#include <algorithm>
#include <utility>

#include "possmc/error.hpp"

namespace possmc {

namespace {

Formula rebuild_unary(const Formula& like, Formula child) {
  switch (like.op()) {
    case FormulaOp::Not: return Formula::negation(std::move(child));
    case FormulaOp::Next: return Formula::next(std::move(child));
    case FormulaOp::Eventually: return Formula::eventually(std::move(child));
    case FormulaOp::BoundedEventually:
      return Formula::bounded_eventually(like.bound(), std::move(child));
    case FormulaOp::Always: return Formula::always(std::move(child));
    default: break;
  }
  throw Error(ErrorKind::Internal, "not a unary operator");
}

Formula rebuild_binary(const Formula& like, Formula l, Formula r) {
  switch (like.op()) {
    case FormulaOp::And: return Formula::conjunction(std::move(l), std::move(r));
    case FormulaOp::Or: return Formula::disjunction(std::move(l), std::move(r));
    case FormulaOp::Implies: return Formula::implication(std::move(l), std::move(r));
    case FormulaOp::Until: return Formula::until(std::move(l), std::move(r));
    case FormulaOp::BoundedUntil:
      return Formula::bounded_until(like.bound(), std::move(l), std::move(r));
    default: break;
  }
  throw Error(ErrorKind::Internal, "not a binary operator");
}

std::pair<unsigned, Formula> strip_next(const Formula& f) {
  unsigned k = 0;
  const Formula* cur = &f;
  while (cur->op() == FormulaOp::Next) {
    ++k;
    cur = &cur->child();
  }
  return {k, *cur};
}

Formula wrap_next(unsigned k, Formula f) {
  for (unsigned i = 0; i < k; ++i) f = Formula::next(std::move(f));
  return f;
}

Formula push_negation(const Formula& inner);

Formula normalize(const Formula& f) {
  switch (f.op()) {
    case FormulaOp::True:
    case FormulaOp::Atom:
      return f;
    case FormulaOp::Not:
      return push_negation(f.child());
    case FormulaOp::Next:
      return Formula::next(normalize(f.child()));
    case FormulaOp::Eventually:
    case FormulaOp::BoundedEventually:
    case FormulaOp::Always: {
      auto [k, core] = strip_next(normalize(f.child()));
      return wrap_next(k, rebuild_unary(f, std::move(core)));
    }
    case FormulaOp::And:
    case FormulaOp::Or:
    case FormulaOp::Implies:
    case FormulaOp::Until:
    case FormulaOp::BoundedUntil: {
      Formula l = normalize(f.left());
      Formula r = normalize(f.right());
      const bool until_like = f.op() == FormulaOp::Until || f.op() == FormulaOp::BoundedUntil;
      if (until_like && l.op() == FormulaOp::True) {
        auto [k, core] = strip_next(r);
        Formula ev = f.op() == FormulaOp::Until
                         ? Formula::eventually(std::move(core))
                         : Formula::bounded_eventually(f.bound(), std::move(core));
        return wrap_next(k, std::move(ev));
      }
      auto [kl, cl] = strip_next(l);
      auto [kr, cr] = strip_next(r);
      // true is invariant under X, so it never blocks lifting.
      unsigned k = 0;
      if (cl.op() == FormulaOp::True && kl == 0) {
        k = kr;
      } else if (cr.op() == FormulaOp::True && kr == 0) {
        k = kl;
      } else {
        k = std::min(kl, kr);
      }
      if (k == 0) return rebuild_binary(f, std::move(l), std::move(r));
      Formula nl = cl.op() == FormulaOp::True && kl == 0 ? cl : wrap_next(kl - k, cl);
      Formula nr = cr.op() == FormulaOp::True && kr == 0 ? cr : wrap_next(kr - k, cr);
      return wrap_next(k, rebuild_binary(f, std::move(nl), std::move(nr)));
    }
  }
  return f;
}

// normalize(!inner)
Formula push_negation(const Formula& inner) {
  switch (inner.op()) {
    case FormulaOp::Not:
      return normalize(inner.child());
    case FormulaOp::Next:
      return Formula::next(push_negation(inner.child()));
    case FormulaOp::Eventually:
      return normalize(Formula::always(Formula::negation(inner.child())));
    case FormulaOp::Always:
      return normalize(Formula::eventually(Formula::negation(inner.child())));
    default:
      break;
  }
  Formula n = normalize(inner);
  switch (n.op()) {
    case FormulaOp::Not:
    case FormulaOp::Next:
    case FormulaOp::Eventually:
    case FormulaOp::Always:
      return push_negation(n);
    default:
      return Formula::negation(std::move(n));
  }
}

std::optional<CompiledPattern> match_core(const Formula& f) {
  CompiledPattern out;
  if (f.is_state_formula()) {
    out.kind = PatternKind::State;
    out.right = f;
    return out;
  }
  switch (f.op()) {
    case FormulaOp::Eventually: {
      const Formula& c = f.child();
      if (c.is_state_formula()) {
        out.kind = PatternKind::Eventually;
        out.right = c;
        return out;
      }
      if (c.op() == FormulaOp::Always && c.child().is_state_formula()) {
        out.kind = PatternKind::Persistence;
        out.right = c.child();
        return out;
      }
      return std::nullopt;
    }
    case FormulaOp::BoundedEventually:
      if (!f.child().is_state_formula()) return std::nullopt;
      out.kind = PatternKind::BoundedEventually;
      out.right = f.child();
      out.bound = f.bound();
      return out;
    case FormulaOp::Always: {
      const Formula& c = f.child();
      if (c.is_state_formula()) {
        out.kind = PatternKind::Always;
        out.right = c;
        return out;
      }
      if (c.op() == FormulaOp::Eventually && c.child().is_state_formula()) {
        out.kind = PatternKind::RepeatedReachability;
        out.right = c.child();
        return out;
      }
      return std::nullopt;
    }
    case FormulaOp::Until:
    case FormulaOp::BoundedUntil:
      if (!f.left().is_state_formula() || !f.right().is_state_formula()) return std::nullopt;
      out.kind = f.op() == FormulaOp::Until ? PatternKind::Until : PatternKind::BoundedUntil;
      out.left = f.left();
      out.right = f.right();
      out.bound = f.op() == FormulaOp::BoundedUntil ? f.bound() : 0;
      return out;
    default:
      return std::nullopt;
  }
}

}  // namespace

std::string CompiledPattern::to_string() const {
  std::string s = shift > 0 ? "X^" + std::to_string(shift) + " " : "";
  s += possmc::to_string(kind);
  if (kind == PatternKind::BoundedEventually || kind == PatternKind::BoundedUntil) {
    s += "<=" + std::to_string(bound);
  }
  s += "(";
  if (left) s += left->to_string() + ", ";
  s += right.to_string() + ")";
  return s;
}

Formula normalize_formula(const Formula& phi) { return normalize(phi); }

std::optional<CompiledPattern> compile_pattern(const Formula& phi) {
  auto [k, core] = strip_next(normalize(phi));
  auto matched = match_core(core);
  if (matched) matched->shift = k;
  return matched;
}

PatternSpec bind_pattern(const Gpks& model, const CompiledPattern& pattern) {
  PatternSpec spec;
  spec.kind = pattern.kind;
  spec.bound = pattern.bound;
  spec.shift = pattern.shift;
  spec.right = state_expression_eval(model, pattern.right);
  if (pattern.left) spec.left = state_expression_eval(model, *pattern.left);
  return spec;
}

FuzzyVector check_vector(const Gpks& model, const Formula& phi, Measure measure) {
  auto compiled = compile_pattern(phi);
  if (!compiled) {
    throw Error(ErrorKind::UnsupportedFormula,
                "no closed form for '" + phi.to_string() +
                    "'; use the oracle command or an automaton-based check");
  }
  const PatternSpec spec = bind_pattern(model, *compiled);
  return measure == Measure::Possibility ? possibility_of(model, spec)
                                         : necessity_of(model, spec);
}

Poss check_state(const Gpks& model, const Formula& phi, std::size_t state, Measure measure) {
  if (state >= model.size()) {
    throw Error(ErrorKind::UnknownState, "state index " + std::to_string(state) + " out of range");
  }
  return check_vector(model, phi, measure)[state];
}

}  // namespace possmc

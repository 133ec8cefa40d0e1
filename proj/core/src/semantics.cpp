#include "possmc/semantics.hpp"

#include <algorithm>
#include <set>

#include "possmc/error.hpp"

namespace possmc {

namespace {

using Values = std::vector<Poss>;

class Evaluator {
 public:
  explicit Evaluator(const UltimatelyPeriodicWord& w) : w_(w), n_(w.positions()) {
    if (w.period.empty()) throw Error(ErrorKind::InvalidLasso, "word period is empty");
  }

  Values eval(const Formula& f) {
    switch (f.op()) {
      case FormulaOp::True:
        return Values(n_, Poss::one());
      case FormulaOp::Atom: {
        Values v(n_);
        for (std::size_t i = 0; i < n_; ++i) {
          const Letter& letter = w_.at(i);
          auto it = letter.find(f.name());
          if (it == letter.end()) {
            throw Error(ErrorKind::UnknownAtom, "letter has no proposition '" + f.name() + "'");
          }
          v[i] = it->second;
        }
        return v;
      }
      case FormulaOp::Not: {
        Values v = eval(f.child());
        for (auto& x : v) x = complement(x);
        return v;
      }
      case FormulaOp::And:
        return pointwise(eval(f.left()), eval(f.right()),
                         [](Poss a, Poss b) { return std::min(a, b); });
      case FormulaOp::Or:
        return pointwise(eval(f.left()), eval(f.right()),
                         [](Poss a, Poss b) { return std::max(a, b); });
      case FormulaOp::Implies:
        return pointwise(eval(f.left()), eval(f.right()),
                         [](Poss a, Poss b) { return std::max(complement(a), b); });
      case FormulaOp::Next: {
        const Values sub = eval(f.child());
        Values v(n_);
        for (std::size_t i = 0; i < n_; ++i) v[i] = sub[w_.successor(i)];
        return v;
      }
      case FormulaOp::Until:
        return until(eval(f.left()), eval(f.right()));
      case FormulaOp::Eventually:
        return until(Values(n_, Poss::one()), eval(f.child()));
      case FormulaOp::Always: {
        // G phi = !F !phi
        Values sub = eval(f.child());
        for (auto& x : sub) x = complement(x);
        Values v = until(Values(n_, Poss::one()), sub);
        for (auto& x : v) x = complement(x);
        return v;
      }
      case FormulaOp::BoundedUntil:
        return bounded_until(eval(f.left()), eval(f.right()), f.bound());
      case FormulaOp::BoundedEventually:
        return bounded_until(Values(n_, Poss::one()), eval(f.child()), f.bound());
    }
    throw Error(ErrorKind::Internal, "unhandled formula operator");
  }

 private:
  template <typename Op>
  static Values pointwise(Values a, const Values& b, Op op) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = op(a[i], b[i]);
    return a;
  }

  // Least solution of v(i) = max(b(i), min(a(i), v(succ i))), found by
  // backward sweeps from the bottom element.
  Values until(const Values& a, const Values& b) const {
    std::set<Poss> distinct(a.begin(), a.end());
    distinct.insert(b.begin(), b.end());
    distinct.insert(Poss::zero());
    const std::size_t max_sweeps = distinct.size() + 1;

    Values v(n_, Poss::zero());
    for (std::size_t sweep = 0;; ++sweep) {
      bool changed = false;
      for (std::size_t k = n_; k-- > 0;) {
        const Poss next = std::max(b[k], std::min(a[k], v[w_.successor(k)]));
        if (next != v[k]) {
          v[k] = next;
          changed = true;
        }
      }
      if (!changed) return v;
      if (sweep + 1 > max_sweeps) {
        throw Error(ErrorKind::Internal, "until evaluation did not stabilise");
      }
    }
  }

  Values bounded_until(const Values& a, const Values& b, unsigned bound) const {
    Values v = b;
    for (unsigned step = 0; step < bound; ++step) {
      Values next(n_);
      for (std::size_t k = 0; k < n_; ++k) {
        next[k] = std::max(b[k], std::min(a[k], v[w_.successor(k)]));
      }
      if (next == v) break;  // the recurrence is stationary from here on
      v = std::move(next);
    }
    return v;
  }

  const UltimatelyPeriodicWord& w_;
  std::size_t n_;
};

}  // namespace

std::vector<Poss> language_eval_positions(const Formula& phi, const UltimatelyPeriodicWord& w) {
  return Evaluator(w).eval(phi);
}

Poss language_eval(const Formula& phi, const UltimatelyPeriodicWord& w) {
  return language_eval_positions(phi, w).front();
}

Poss path_eval(const Gpks& model, const Formula& phi, const LassoPath& path) {
  return language_eval(phi, trace(model, path));
}

}  // namespace possmc

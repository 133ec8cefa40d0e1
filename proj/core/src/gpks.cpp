#include "possmc/gpks.hpp"

#include <algorithm>
#include <set>

#include "possmc/error.hpp"

namespace possmc {

Gpks::Gpks(std::vector<std::string> states, std::vector<std::string> ap,
           FuzzyMatrix transitions, FuzzyVector initial, FuzzyMatrix labels)
    : states_(std::move(states)),
      ap_(std::move(ap)),
      trans_(std::move(transitions)),
      initial_(std::move(initial)),
      labels_(std::move(labels)) {
  const std::size_t n = states_.size();
  if (trans_.rows() != n || trans_.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch, "transition matrix must be " +
                                                  std::to_string(n) + "x" +
                                                  std::to_string(n));
  }
  if (initial_.size() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "initial distribution must have " + std::to_string(n) + " entries");
  }
  if (labels_.rows() != n || labels_.cols() != ap_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "label matrix must be " +
                                                  std::to_string(n) + "x" +
                                                  std::to_string(ap_.size()));
  }
}

std::optional<std::size_t> Gpks::find_state(std::string_view name) const {
  auto it = std::ranges::find(states_, name);
  if (it == states_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

std::optional<std::size_t> Gpks::find_ap(std::string_view name) const {
  auto it = std::ranges::find(ap_, name);
  if (it == ap_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ap_.begin());
}

std::size_t Gpks::state_index(std::string_view name) const {
  if (auto i = find_state(name)) return *i;
  throw Error(ErrorKind::UnknownState, "unknown state '" + std::string(name) + "'");
}

std::vector<Violation> validate(const Gpks& model) {
  std::vector<Violation> out;
  if (model.size() == 0) {
    out.push_back({"empty-model", "", "model declares no states"});
  }
  std::set<std::string_view> seen;
  for (const auto& s : model.states()) {
    if (s.empty()) {
      out.push_back({"empty-state-name", s, "state name is empty"});
    } else if (!seen.insert(s).second) {
      out.push_back({"duplicate-state", s, "state '" + s + "' declared more than once"});
    }
  }
  seen.clear();
  for (const auto& a : model.ap()) {
    if (a.empty()) {
      out.push_back({"empty-ap-name", a, "atomic proposition name is empty"});
    } else if (!seen.insert(a).second) {
      out.push_back({"duplicate-ap", a, "proposition '" + a + "' declared more than once"});
    }
  }
  for (std::size_t s = 0; s < model.size(); ++s) {
    const auto row = model.transitions().row(s);
    if (std::ranges::all_of(row, [](Poss p) { return p.is_zero(); })) {
      out.push_back({"terminal-state", model.states()[s],
                     "state '" + model.states()[s] + "' has no successor with positive possibility"});
    }
  }
  return out;
}

bool has_crisp_labels(const Gpks& model) {
  return std::ranges::all_of(model.labels().entries(),
                             [](Poss p) { return p.is_zero() || p.is_one(); });
}

bool is_normal(const Gpks& model) {
  for (std::size_t s = 0; s < model.size(); ++s) {
    if (std::ranges::max(model.transitions().row(s)) != Poss::one()) return false;
  }
  return model.size() > 0 && std::ranges::max(model.initial().entries()) == Poss::one();
}

FuzzyVector path_supremum(const FuzzyMatrix& q) {
  const FuzzyMatrix plus = transitive_closure(q);
  return compose(plus, plus.diagonal_entries());
}

FuzzyVector r_p(const Gpks& model) { return path_supremum(model.transitions()); }

void check_lasso(const Gpks& model, const LassoPath& path) {
  if (path.cycle.empty()) throw Error(ErrorKind::InvalidLasso, "lasso cycle is empty");
  const std::size_t n = path.length();
  for (std::size_t i = 0; i < n; ++i) {
    if (path.at(i) >= model.size()) {
      throw Error(ErrorKind::InvalidLasso,
                  "lasso visits state index " + std::to_string(path.at(i)) + " out of range");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t from = path.at(i);
    const std::size_t to = i + 1 < n ? path.at(i + 1) : path.cycle.front();
    if (model.transition(from, to).is_zero()) {
      throw Error(ErrorKind::InvalidLasso, "lasso uses impossible step " +
                                               model.states()[from] + " -> " +
                                               model.states()[to]);
    }
  }
}

Poss path_possibility(const Gpks& model, const LassoPath& path) {
  check_lasso(model, path);
  Poss value = model.initial()[path.first()];
  const std::size_t n = path.length();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t to = i + 1 < n ? path.at(i + 1) : path.cycle.front();
    value = std::min(value, model.transition(path.at(i), to));
  }
  return value;
}

Poss cylinder_possibility(const Gpks& model, const std::vector<std::size_t>& fragment) {
  if (fragment.empty()) throw Error(ErrorKind::EmptyFragment, "cylinder of an empty fragment");
  for (std::size_t s : fragment) {
    if (s >= model.size()) {
      throw Error(ErrorKind::UnknownState, "state index " + std::to_string(s) + " out of range");
    }
  }
  Poss value = model.initial()[fragment.front()];
  for (std::size_t i = 0; i + 1 < fragment.size(); ++i) {
    value = std::min(value, model.transition(fragment[i], fragment[i + 1]));
  }
  return std::min(value, r_p(model)[fragment.back()]);
}

Poss total_possibility(const Gpks& model) { return compose(model.initial(), r_p(model)); }

Gpks rebase_initial(const Gpks& model, std::size_t state) {
  if (state >= model.size()) {
    throw Error(ErrorKind::UnknownState, "state index " + std::to_string(state) + " out of range");
  }
  return Gpks(model.states(), model.ap(), model.transitions(),
              FuzzyVector::indicator(model.size(), state), model.labels());
}

Gpks rebase_initial(const Gpks& model, std::string_view state) {
  return rebase_initial(model, model.state_index(state));
}

Letter letter_of(const Gpks& model, std::size_t state) {
  if (state >= model.size()) {
    throw Error(ErrorKind::UnknownState, "state index " + std::to_string(state) + " out of range");
  }
  Letter letter;
  for (std::size_t a = 0; a < model.ap().size(); ++a) {
    letter.emplace(model.ap()[a], model.label(state, a));
  }
  return letter;
}

UltimatelyPeriodicWord trace(const Gpks& model, const LassoPath& path) {
  check_lasso(model, path);
  UltimatelyPeriodicWord w;
  w.prefix.reserve(path.prefix.size());
  w.period.reserve(path.cycle.size());
  for (std::size_t s : path.prefix) w.prefix.push_back(letter_of(model, s));
  for (std::size_t s : path.cycle) w.period.push_back(letter_of(model, s));
  return w;
}

FuzzyVector state_expression_eval(const Gpks& model, const Formula& expr) {
  const std::size_t n = model.size();
  switch (expr.op()) {
    case FormulaOp::True:
      return FuzzyVector::ones(n);
    case FormulaOp::Atom: {
      const auto a = model.find_ap(expr.name());
      if (!a) throw Error(ErrorKind::UnknownAtom, "unknown proposition '" + expr.name() + "'");
      FuzzyVector v(n);
      for (std::size_t s = 0; s < n; ++s) v[s] = model.label(s, *a);
      return v;
    }
    case FormulaOp::Not:
      return complement(state_expression_eval(model, expr.child()));
    case FormulaOp::And:
      return meet(state_expression_eval(model, expr.left()),
                  state_expression_eval(model, expr.right()));
    case FormulaOp::Or:
      return join(state_expression_eval(model, expr.left()),
                  state_expression_eval(model, expr.right()));
    case FormulaOp::Implies:
      return join(complement(state_expression_eval(model, expr.left())),
                  state_expression_eval(model, expr.right()));
    default:
      throw Error(ErrorKind::UnsupportedFormula,
                  "temporal operator in state expression: " + expr.to_string());
  }
}

}  // namespace possmc

#include "possmc/automaton.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "possmc/error.hpp"

namespace possmc {

std::string to_string(AcceptanceMode mode) {
  return mode == AcceptanceMode::FiniteWord ? "finite" : "buchi";
}

std::optional<std::size_t> FuzzyAutomaton::find_state(std::string_view state) const {
  auto it = std::find(states.begin(), states.end(), state);
  if (it == states.end()) return std::nullopt;
  return static_cast<std::size_t>(it - states.begin());
}

std::size_t FuzzyAutomaton::state_index(std::string_view state) const {
  if (auto i = find_state(state)) return *i;
  throw Error(ErrorKind::UnknownState, "automaton has no state '" + std::string(state) + "'");
}

void check_automaton(const FuzzyAutomaton& a) {
  if (a.initial.size() != a.size() || a.final.size() != a.size()) {
    throw Error(ErrorKind::DimensionMismatch, "initial/final vectors do not match the automaton states");
  }
  for (const auto& t : a.transitions) {
    if (t.from >= a.size() || t.to >= a.size()) {
      throw Error(ErrorKind::UnknownState, "transition endpoint out of range");
    }
    for (const auto& atom : t.guard.atoms()) {
      if (std::find(a.ap.begin(), a.ap.end(), atom) == a.ap.end()) {
        throw Error(ErrorKind::UnknownAtom, "guard uses undeclared proposition '" + atom + "'");
      }
    }
  }
}

Poss delta(const FuzzyAutomaton& a, std::size_t q, const Letter& letter, std::size_t q2) {
  if (q >= a.size() || q2 >= a.size()) {
    throw Error(ErrorKind::UnknownState, "automaton state index out of range");
  }
  Poss best = Poss::zero();
  for (const auto& t : a.transitions) {
    if (t.from == q && t.to == q2 && t.value > best && t.guard.accepts(letter)) best = t.value;
  }
  return best;
}

FuzzyMatrix delta_matrix(const FuzzyAutomaton& a, const Letter& letter) {
  FuzzyMatrix m(a.size(), a.size());
  for (const auto& t : a.transitions) {
    if (t.value > m(t.from, t.to) && t.guard.accepts(letter)) m(t.from, t.to) = t.value;
  }
  return m;
}

Poss accept_finite(const FuzzyAutomaton& a, const std::vector<Letter>& word) {
  if (a.mode != AcceptanceMode::FiniteWord) {
    throw Error(ErrorKind::WrongMode, "accept_finite needs a finite-word automaton");
  }
  FuzzyVector v = a.initial;
  for (const Letter& letter : word) v = compose(v, delta_matrix(a, letter));
  return compose(v, a.final);
}

std::optional<std::size_t> deterministic_initial(const FuzzyAutomaton& a) {
  std::optional<std::size_t> q0;
  for (std::size_t q = 0; q < a.size(); ++q) {
    if (a.initial[q].is_zero()) continue;
    if (!a.initial[q].is_one() || q0) return std::nullopt;
    q0 = q;
  }
  return q0;
}

namespace {

std::optional<std::size_t> unique_crisp_successor(const FuzzyMatrix& m, std::size_t q) {
  std::optional<std::size_t> succ;
  for (std::size_t q2 = 0; q2 < m.cols(); ++q2) {
    const Poss d = m(q, q2);
    if (d.is_zero()) continue;
    if (!d.is_one() || succ) return std::nullopt;
    succ = q2;
  }
  return succ;
}

}  // namespace

bool is_deterministic(const FuzzyAutomaton& a, const std::vector<Letter>& alphabet) {
  if (!deterministic_initial(a)) return false;
  for (const Letter& letter : alphabet) {
    const FuzzyMatrix m = delta_matrix(a, letter);
    for (std::size_t q = 0; q < a.size(); ++q) {
      if (!unique_crisp_successor(m, q)) return false;
    }
  }
  return true;
}

std::size_t det_successor(const FuzzyAutomaton& a, std::size_t q, const Letter& letter) {
  if (q >= a.size()) throw Error(ErrorKind::UnknownState, "automaton state index out of range");
  if (auto succ = unique_crisp_successor(delta_matrix(a, letter), q)) return *succ;
  throw Error(ErrorKind::NotDeterministic,
              "state '" + a.states[q] + "' has no unique successor of degree 1 on this letter");
}

Poss accept_omega(const FuzzyAutomaton& a, const UltimatelyPeriodicWord& w) {
  if (a.mode != AcceptanceMode::Buchi) {
    throw Error(ErrorKind::WrongMode, "accept_omega needs a Buchi automaton");
  }
  const std::size_t nq = a.size();
  const std::size_t np = w.positions();
  std::vector<FuzzyMatrix> step;
  step.reserve(np);
  for (std::size_t pos = 0; pos < np; ++pos) step.push_back(delta_matrix(a, w.at(pos)));

  std::set<Poss, std::greater<>> levels;
  for (Poss x : a.initial) levels.insert(x);
  for (Poss x : a.final) levels.insert(x);
  for (const auto& m : step) levels.insert(m.entries().begin(), m.entries().end());
  levels.erase(Poss::zero());

  const std::size_t n = nq * np;
  auto node = [np](std::size_t q, std::size_t pos) { return q * np + pos; };

  for (Poss v : levels) {
    std::vector<std::vector<std::size_t>> succ(n);
    for (std::size_t pos = 0; pos < np; ++pos) {
      const std::size_t next = w.successor(pos);
      for (std::size_t q = 0; q < nq; ++q) {
        for (std::size_t q2 = 0; q2 < nq; ++q2) {
          if (step[pos](q, q2) >= v) succ[node(q, pos)].push_back(node(q2, next));
        }
      }
    }
    auto reach = [&](std::vector<std::size_t> frontier) {
      std::vector<char> seen(n, 0);
      for (auto x : frontier) seen[x] = 1;
      while (!frontier.empty()) {
        const std::size_t x = frontier.back();
        frontier.pop_back();
        for (auto y : succ[x]) {
          if (!seen[y]) {
            seen[y] = 1;
            frontier.push_back(y);
          }
        }
      }
      return seen;
    };
    std::vector<std::size_t> starts;
    for (std::size_t q = 0; q < nq; ++q) {
      if (a.initial[q] >= v) starts.push_back(node(q, 0));
    }
    const auto reachable = reach(starts);
    for (std::size_t q = 0; q < nq; ++q) {
      if (a.final[q] < v) continue;
      for (std::size_t pos = w.prefix.size(); pos < np; ++pos) {
        const std::size_t x = node(q, pos);
        if (!reachable[x]) continue;
        if (reach(succ[x])[x]) return v;
      }
    }
  }
  return Poss::zero();
}

Letter restrict_letter(const Letter& letter, const std::vector<std::string>& ap) {
  Letter out;
  for (const auto& name : ap) {
    auto it = letter.find(name);
    if (it != letter.end()) out.emplace(it->first, it->second);
  }
  return out;
}

std::vector<Letter> model_alphabet(const Gpks& model, const FuzzyAutomaton& a) {
  std::vector<Letter> out;
  auto add = [&](Letter letter) {
    if (std::find(out.begin(), out.end(), letter) == out.end()) out.push_back(std::move(letter));
  };
  for (std::size_t s = 0; s < model.size(); ++s) add(restrict_letter(letter_of(model, s), a.ap));
  for (const auto& letter : a.extra_letters) add(restrict_letter(letter, a.ap));
  return out;
}

}  // namespace possmc

#include "possmc/product.hpp"

#include <algorithm>

#include "possmc/error.hpp"
#include "possmc/patterns.hpp"

namespace possmc {

ProductGpks product(const Gpks& model, const FuzzyAutomaton& a) {
  for (const auto& name : a.ap) {
    if (!model.find_ap(name)) {
      throw Error(ErrorKind::ApMismatch, "automaton proposition '" + name + "' is not in the model");
    }
  }
  check_automaton(a);

  const std::size_t ns = model.size();
  const std::size_t nq = a.size();
  ProductGpks out;
  out.model_states = ns;
  out.automaton_states = nq;

  std::vector<FuzzyMatrix> delta_at(ns);
  for (std::size_t s = 0; s < ns; ++s) delta_at[s] = delta_matrix(a, letter_of(model, s));

  std::vector<std::string> names;
  names.reserve(ns * nq);
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t q = 0; q < nq; ++q) names.push_back(model.states()[s] + "|" + a.states[q]);
  }

  const std::size_t n = ns * nq;
  FuzzyMatrix trans(n, n);
  FuzzyVector init(n);
  out.accepting = FuzzyVector(n);
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t q = 0; q < nq; ++q) {
      const std::size_t i = out.index(s, q);
      out.accepting[i] = a.final[q];
      Poss entry = Poss::zero();
      for (std::size_t q0 = 0; q0 < nq; ++q0) {
        entry = std::max(entry, std::min(a.initial[q0], delta_at[s](q0, q)));
      }
      init[i] = std::min(model.initial()[s], entry);
      for (std::size_t s2 = 0; s2 < ns; ++s2) {
        const Poss p = model.transition(s, s2);
        if (p.is_zero()) continue;
        for (std::size_t q2 = 0; q2 < nq; ++q2) {
          trans(i, out.index(s2, q2)) = std::min(p, delta_at[s2](q, q2));
        }
      }
    }
  }

  FuzzyMatrix labels(n, n);
  for (std::size_t i = 0; i < n; ++i) labels(i, i) = Poss::one();
  std::vector<std::string> ap = names;
  out.model = Gpks(std::move(names), std::move(ap), std::move(trans), std::move(init),
                   std::move(labels));
  return out;
}

namespace {

void require_state(const Gpks& model, std::size_t s) {
  if (s >= model.size()) {
    throw Error(ErrorKind::UnknownState, "state index " + std::to_string(s) + " out of range");
  }
}

void require_mode(const FuzzyAutomaton& a, AcceptanceMode mode) {
  if (a.mode != mode) {
    throw Error(ErrorKind::WrongMode, "automaton '" + a.name + "' is a " + to_string(a.mode) +
                                          " automaton, expected " + to_string(mode));
  }
}

void require_deterministic(const Gpks& model, const FuzzyAutomaton& a) {
  if (!is_deterministic(a, model_alphabet(model, a))) {
    throw Error(ErrorKind::NotDeterministic,
                "automaton '" + a.name + "' is not deterministic over the model's letters");
  }
}

}  // namespace

std::size_t start_automaton_state(const Gpks& model, const FuzzyAutomaton& a, std::size_t s) {
  require_state(model, s);
  auto q0 = deterministic_initial(a);
  if (!q0) throw Error(ErrorKind::NotDeterministic, "automaton has no unique crisp initial state");
  return det_successor(a, *q0, restrict_letter(letter_of(model, s), a.ap));
}

CheckReport safety_check(const Gpks& model, const FuzzyAutomaton& a, std::size_t s) {
  require_mode(a, AcceptanceMode::FiniteWord);
  require_state(model, s);
  require_deterministic(model, a);
  CheckReport report;
  report.kind = PropertyKind::Safety;
  report.automaton = a.name;
  report.state = s;
  report.product = product(model, a);
  const std::size_t i = report.product.index(s, start_automaton_state(model, a, s));
  report.product_state = i;
  const Gpks& pm = report.product.model;
  report.possibility = always(pm, report.product.accepting)[i];
  report.necessity = complement(eventually(pm, complement(report.product.accepting))[i]);
  return report;
}

Poss safety_possibility(const Gpks& model, const FuzzyAutomaton& a, std::size_t s) {
  return safety_check(model, a, s).possibility;
}

Poss safety_necessity(const Gpks& model, const FuzzyAutomaton& a, std::size_t s) {
  return safety_check(model, a, s).necessity;
}

CheckReport omega_check(const Gpks& model, const FuzzyAutomaton& a,
                        std::optional<std::size_t> state) {
  require_mode(a, AcceptanceMode::Buchi);
  CheckReport report;
  report.kind = PropertyKind::Omega;
  report.automaton = a.name;
  report.state = state;
  if (state) {
    require_state(model, *state);
    report.product = product(rebase_initial(model, *state), a);
  } else {
    report.product = product(model, a);
  }
  const Gpks& pm = report.product.model;
  const FuzzyVector rr = repeated_reachability(pm, report.product.accepting);
  report.possibility = aggregate_initial(pm, rr);
  report.necessity = complement(
      aggregate_initial(pm, persistence(pm, complement(report.product.accepting))));

  if (state && is_deterministic(a, model_alphabet(model, a))) {
    const std::size_t i = report.product.index(*state, start_automaton_state(model, a, *state));
    report.product_state = i;
    if (rr[i] != report.possibility) {
      throw Error(ErrorKind::Internal, "initial-aggregate and (s, q_s) forms disagree");
    }
  }
  return report;
}

Poss omega_possibility(const Gpks& model, const FuzzyAutomaton& a,
                       std::optional<std::size_t> state) {
  return omega_check(model, a, state).possibility;
}

Poss omega_necessity(const Gpks& model, const FuzzyAutomaton& a,
                     std::optional<std::size_t> state) {
  return omega_check(model, a, state).necessity;
}

}  // namespace possmc

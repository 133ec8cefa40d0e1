#include "possmc_cli/commands.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "possmc/compile.hpp"
#include "possmc/error.hpp"
#include "possmc/io.hpp"
#include "possmc/oracle.hpp"
#include "possmc/patterns.hpp"
#include "possmc/product.hpp"
#include "possmc/semantics.hpp"

namespace possmc::cli {

namespace {

using ojson = nlohmann::ordered_json;

ojson vector_json(const std::vector<std::string>& names, const FuzzyVector& v) {
  ojson out = ojson::object();
  for (std::size_t i = 0; i < names.size(); ++i) out[names[i]] = to_string(v[i]);
  return out;
}

ojson matrix_json(const std::vector<std::string>& names, const FuzzyMatrix& m) {
  ojson out = ojson::object();
  for (std::size_t i = 0; i < names.size(); ++i) {
    ojson row = ojson::object();
    for (std::size_t j = 0; j < names.size(); ++j) row[names[j]] = to_string(m(i, j));
    out[names[i]] = row;
  }
  return out;
}

Measure parse_measure(const std::string& text) {
  return text == "ne" ? Measure::Necessity : Measure::Possibility;
}

std::string measure_name(Measure m) { return m == Measure::Possibility ? "po" : "ne"; }

/// A propositional expression over AP, or a JSON object {state: "decimal"}.
FuzzyVector fuzzy_state_argument(const Gpks& model, const std::string& text) {
  auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorKind::Format, std::string("fuzzy state literal: ") + e.what());
    }
    FuzzyVector v(model.size());
    for (const auto& [state, value] : doc.items()) {
      if (!value.is_string()) throw Error(ErrorKind::Format, "fuzzy state entries must be decimal strings");
      v[model.state_index(state)] = parse_poss(value.get<std::string>());
    }
    return v;
  }
  return state_expression_eval(model, parse_formula(text));
}

std::optional<PatternKind> pattern_kind(const std::string& name) {
  static const PatternKind kAll[] = {
      PatternKind::State,         PatternKind::Eventually,   PatternKind::BoundedEventually,
      PatternKind::Always,        PatternKind::Until,        PatternKind::BoundedUntil,
      PatternKind::RepeatedReachability, PatternKind::Persistence};
  for (PatternKind k : kAll) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

struct Target {
  std::string state;
  bool initial = false;
};

void add_target(CLI::App* cmd, Target& t) {
  auto* s = cmd->add_option("--state", t.state, "Report the value at this state");
  auto* i = cmd->add_flag("--initial", t.initial, "Aggregate over the initial distribution");
  s->excludes(i);
}

void add_measure(CLI::App* cmd, std::string& measure) {
  cmd->add_option("--measure", measure, "po (possibility) or ne (necessity)")
      ->check(CLI::IsMember({"po", "ne"}));
}

// Value of a per-state vector aggregated over I, honouring the measure.
Poss aggregate(const Gpks& model, const FuzzyVector& v, Measure m) {
  return m == Measure::Possibility ? aggregate_initial(model, v)
                                   : complement(aggregate_initial(model, complement(v)));
}

struct CheckArgs {
  std::string model;
  std::string formula;
  std::string pattern;
  std::string set;
  std::string left;
  std::string right;
  unsigned bound = 0;
  unsigned next = 0;
  Target target;
  std::string measure = "po";
};

ojson cmd_check(const CheckArgs& a) {
  const Gpks model = read_model(a.model);
  const Measure m = parse_measure(a.measure);
  ojson report;
  report["command"] = "check";
  report["model"] = a.model;

  FuzzyVector vec;
  if (!a.formula.empty()) {
    const Formula phi = parse_formula(a.formula);
    report["formula"] = phi.to_string();
    auto compiled = compile_pattern(phi);
    if (!compiled) {
      throw Error(ErrorKind::UnsupportedFormula,
                  "no closed form for '" + phi.to_string() +
                      "'; run the oracle command for a bounded path search, or express it "
                      "with an automaton (safety / omega)");
    }
    report["pattern"] = compiled->to_string();
    const PatternSpec spec = bind_pattern(model, *compiled);
    vec = m == Measure::Possibility ? possibility_of(model, spec) : necessity_of(model, spec);
  } else {
    auto kind = pattern_kind(a.pattern);
    if (!kind) throw Error(ErrorKind::Syntax, "unknown pattern '" + a.pattern + "'");
    PatternSpec spec;
    spec.kind = *kind;
    spec.bound = a.bound;
    spec.shift = a.next;
    const std::string& right = !a.right.empty() ? a.right : a.set;
    if (right.empty()) throw Error(ErrorKind::Syntax, "pattern needs --set or --right");
    spec.right = fuzzy_state_argument(model, right);
    if (*kind == PatternKind::Until || *kind == PatternKind::BoundedUntil) {
      if (a.left.empty()) throw Error(ErrorKind::Syntax, "until patterns need --left");
      spec.left = fuzzy_state_argument(model, a.left);
    }
    const PatternResult r = evaluate_pattern(model, spec, m);
    report["pattern"] = r.descriptor;
    vec = r.per_state;
  }
  report["measure"] = measure_name(m);
  report["vector"] = vector_json(model.states(), vec);
  if (!a.target.state.empty()) {
    report["state"] = a.target.state;
    report["value"] = to_string(vec[model.state_index(a.target.state)]);
  } else {
    report["initial"] = to_string(aggregate(model, vec, m));
  }
  return report;
}

ojson cmd_validate(const std::string& path, int& exit_code) {
  const Gpks model = read_model(path);
  const auto violations = validate(model);
  ojson report;
  report["command"] = "validate";
  report["model"] = path;
  report["ok"] = violations.empty();
  ojson list = ojson::array();
  for (const auto& v : violations) {
    list.push_back({{"code", v.code}, {"subject", v.subject}, {"message", v.message}});
  }
  report["violations"] = list;
  report["normal"] = is_normal(model);
  report["crisp_labels"] = has_crisp_labels(model);
  exit_code = violations.empty() ? kOk : kVerificationError;
  return report;
}

ojson cmd_rp(const std::string& path) {
  const Gpks model = read_model(path);
  ojson report;
  report["command"] = "rp";
  report["model"] = path;
  report["vector"] = vector_json(model.states(), r_p(model));
  report["total"] = to_string(total_possibility(model));
  report["normal"] = is_normal(model);
  return report;
}

ojson cmd_closure(const std::string& path, const std::string& kind, bool verify) {
  const Gpks model = read_model(path);
  auto close = [&](const FuzzyMatrix& p) {
    return kind == "reflexive" ? reflexive_transitive_closure(p) : transitive_closure(p);
  };
  const FuzzyMatrix c = close(model.transitions());
  ojson report;
  report["command"] = "closure";
  report["model"] = path;
  report["kind"] = kind;
  report["matrix"] = matrix_json(model.states(), c);
  if (verify) report["idempotent"] = close(c) == c;
  return report;
}

struct AutomatonArgs {
  std::string model;
  std::string automaton;
  Target target;
  std::string measure;
  std::string emit_product;
};

ojson cmd_automaton(const AutomatonArgs& a, PropertyKind kind) {
  const Gpks model = read_model(a.model);
  const FuzzyAutomaton aut = read_automaton(a.automaton);
  ojson report;
  report["command"] = kind == PropertyKind::Safety ? "safety" : "omega";
  report["model"] = a.model;
  report["automaton"] = aut.name;

  Poss po;
  Poss ne;
  std::optional<CheckReport> last;
  if (!a.target.state.empty()) {
    const std::size_t s = model.state_index(a.target.state);
    last = kind == PropertyKind::Safety ? safety_check(model, aut, s) : omega_check(model, aut, s);
    po = last->possibility;
    ne = last->necessity;
    report["state"] = a.target.state;
    if (last->product_state) {
      report["product_state"] = last->product.model.states()[*last->product_state];
    }
  } else if (kind == PropertyKind::Omega) {
    last = omega_check(model, aut, std::nullopt);
    po = last->possibility;
    ne = last->necessity;
    report["initial"] = true;
  } else {
    // Safety values are per state; aggregate them over I.
    FuzzyVector pov(model.size());
    FuzzyVector nev(model.size());
    for (std::size_t s = 0; s < model.size(); ++s) {
      if (model.initial()[s].is_zero()) continue;
      last = safety_check(model, aut, s);
      pov[s] = last->possibility;
      nev[s] = last->necessity;
    }
    po = aggregate(model, pov, Measure::Possibility);
    ne = aggregate(model, nev, Measure::Necessity);
    report["initial"] = true;
    if (!last) last = CheckReport{};
    last->product = product(model, aut);
  }

  if (a.measure.empty() || a.measure == "po") report["po"] = to_string(po);
  if (a.measure.empty() || a.measure == "ne") report["ne"] = to_string(ne);
  report["B"] = vector_json(last->product.model.states(), last->product.accepting);
  ojson terminal = ojson::array();
  for (const auto& v : validate(last->product.model)) {
    if (v.code == "terminal-state") terminal.push_back(v.subject);
  }
  report["product_terminal_states"] = terminal;
  if (!a.emit_product.empty()) {
    write_model(a.emit_product, last->product.model);
    report["product_file"] = a.emit_product;
  }
  return report;
}

struct OracleArgs {
  std::string model;
  std::string formula;
  Target target;
  std::optional<std::size_t> prefix_bound;
  std::optional<std::size_t> cycle_bound;
  std::string measure = "po";
  bool double_check = false;
};

ojson cmd_oracle(const OracleArgs& a) {
  const Gpks model = read_model(a.model);
  const Formula phi = parse_formula(a.formula);
  const Measure m = parse_measure(a.measure);
  OracleConfig cfg;
  cfg.max_prefix = a.prefix_bound;
  cfg.max_cycle = a.cycle_bound;
  if (!a.target.state.empty()) cfg.start = model.state_index(a.target.state);

  auto f = [&](const LassoPath& lasso) { return path_eval(model, phi, lasso); };
  auto run = [&](const OracleConfig& c) {
    return m == Measure::Possibility ? oracle_po(model, c, f) : oracle_ne(model, c, f);
  };

  ojson report;
  report["command"] = "oracle";
  report["model"] = a.model;
  report["formula"] = phi.to_string();
  report["measure"] = measure_name(m);
  if (!a.target.state.empty()) {
    report["state"] = a.target.state;
  } else {
    report["initial"] = true;
  }
  const ResolvedBounds b = resolve_bounds(model, cfg);
  report["bounds"] = {{"prefix", b.max_prefix}, {"cycle", b.max_cycle}};
  const Poss value = run(cfg);
  report["value"] = to_string(value);
  if (a.double_check) {
    OracleConfig twice = cfg;
    twice.max_prefix = 2 * b.max_prefix;
    twice.max_cycle = 2 * b.max_cycle;
    const Poss again = run(twice);
    report["double_check"] = {{"bounds", {{"prefix", *twice.max_prefix}, {"cycle", *twice.max_cycle}}},
                              {"value", to_string(again)},
                              {"agrees", again == value}};
  }
  return report;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Io:
    case ErrorKind::Format:
      return kInputError;
    default:
      return kVerificationError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Possibilistic model checking over fuzzy Kripke structures", "possmc"};
  app.require_subcommand(1);

  std::string path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a model file for well-formedness");
  validate_cmd->add_option("model", path, "Model file")->required();

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Closed-form pattern check");
  check_cmd->add_option("model", check.model, "Model file")->required();
  auto* formula_opt = check_cmd->add_option("--formula", check.formula, "Formula text");
  auto* pattern_opt = check_cmd->add_option("--pattern", check.pattern,
                                            "state, eventually, bounded-eventually, always, until, "
                                            "bounded-until, repeated-reachability, persistence");
  formula_opt->excludes(pattern_opt);
  check_cmd->add_option("--set", check.set, "Fuzzy state argument (expression or JSON map)");
  check_cmd->add_option("--left", check.left, "Constraint argument of until patterns");
  check_cmd->add_option("--right", check.right, "Target argument (same as --set)");
  check_cmd->add_option("--bound", check.bound, "Step bound of bounded patterns");
  check_cmd->add_option("--next", check.next, "Number of X operators in front of the pattern");
  add_target(check_cmd, check.target);
  add_measure(check_cmd, check.measure);

  std::string rp_path;
  auto* rp_cmd = app.add_subcommand("rp", "Path possibility supremum per state");
  rp_cmd->add_option("model", rp_path, "Model file")->required();

  std::string closure_path;
  std::string closure_kind = "transitive";
  bool verify = false;
  auto* closure_cmd = app.add_subcommand("closure", "Transitive or reflexive-transitive closure");
  closure_cmd->add_option("model", closure_path, "Model file")->required();
  closure_cmd->add_option("--kind", closure_kind)->check(CLI::IsMember({"transitive", "reflexive"}));
  closure_cmd->add_flag("--verify", verify, "Also report whether the closure is idempotent");

  AutomatonArgs safety;
  auto* safety_cmd = app.add_subcommand("safety", "Regular safety property via a finite-word automaton");
  AutomatonArgs omega;
  auto* omega_cmd = app.add_subcommand("omega", "Omega-regular property via a Buchi automaton");
  for (auto [cmd, a] : {std::pair{safety_cmd, &safety}, std::pair{omega_cmd, &omega}}) {
    cmd->add_option("model", a->model, "Model file")->required();
    cmd->add_option("automaton", a->automaton, "Automaton file")->required();
    add_target(cmd, a->target);
    add_measure(cmd, a->measure);
    cmd->add_option("--emit-product", a->emit_product, "Write the product model to this file");
  }

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force lasso enumeration");
  oracle_cmd->add_option("model", oracle.model, "Model file")->required();
  oracle_cmd->add_option("--formula", oracle.formula, "Formula text")->required();
  add_target(oracle_cmd, oracle.target);
  oracle_cmd->add_option("--prefix-bound", oracle.prefix_bound, "Maximum prefix length")
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--cycle-bound", oracle.cycle_bound, "Maximum cycle length")
      ->check(CLI::PositiveNumber);
  add_measure(oracle_cmd, oracle.measure);
  oracle_cmd->add_flag("--double-check", oracle.double_check, "Rerun with doubled bounds");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    ojson report;
    int code = kOk;
    if (*validate_cmd) {
      report = cmd_validate(path, code);
    } else if (*check_cmd) {
      if (check.formula.empty() && check.pattern.empty()) {
        throw Error(ErrorKind::Syntax, "check needs --formula or --pattern");
      }
      report = cmd_check(check);
    } else if (*rp_cmd) {
      report = cmd_rp(rp_path);
    } else if (*closure_cmd) {
      report = cmd_closure(closure_path, closure_kind, verify);
    } else if (*safety_cmd) {
      report = cmd_automaton(safety, PropertyKind::Safety);
    } else if (*omega_cmd) {
      report = cmd_automaton(omega, PropertyKind::Omega);
    } else if (*oracle_cmd) {
      report = cmd_oracle(oracle);
    }
    out << report.dump(2) << '\n';
    return code;
  } catch (const Error& e) {
    ojson diag;
    diag["error"] = std::string(to_string(e.kind()));
    diag["message"] = e.what();
    if (e.position()) diag["position"] = *e.position();
    err << diag.dump() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace possmc::cli

#include "possmc/io.hpp"

#include <fstream>

#include "possmc/error.hpp"

namespace possmc {

namespace {

using json = nlohmann::json;

[[noreturn]] void format_error(const std::string& what) { throw Error(ErrorKind::Format, what); }

const json& member(const json& doc, const char* key) {
  if (!doc.is_object()) format_error("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) format_error(std::string("missing \"") + key + "\"");
  return *it;
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) format_error(where + " must be a string");
  return v.get<std::string>();
}

Poss as_poss(const json& v, const std::string& where) {
  const std::string text = as_string(v, where);
  try {
    return parse_poss(text);
  } catch (const Error& e) {
    format_error(where + ": " + e.what());
  }
}

std::vector<std::string> name_list(const json& doc, const char* key) {
  const json& arr = member(doc, key);
  if (!arr.is_array()) format_error(std::string("\"") + key + "\" must be an array");
  std::vector<std::string> out;
  for (const auto& v : arr) out.push_back(as_string(v, std::string("entry of \"") + key + "\""));
  return out;
}

std::size_t lookup(const std::vector<std::string>& names, const std::string& name,
                   const std::string& what) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  format_error("unknown " + what + " '" + name + "'");
}

FuzzyVector state_map(const json& doc, const char* key, const std::vector<std::string>& states,
                      bool required) {
  FuzzyVector out(states.size());
  auto it = doc.find(key);
  if (it == doc.end()) {
    if (required) format_error(std::string("missing \"") + key + "\"");
    return out;
  }
  if (!it->is_object()) format_error(std::string("\"") + key + "\" must be an object");
  for (const auto& [name, value] : it->items()) {
    out[lookup(states, name, "state")] = as_poss(value, std::string(key) + "." + name);
  }
  return out;
}

Letter letter_from_json(const json& v, const std::vector<std::string>& ap) {
  if (!v.is_object()) format_error("letters must be objects");
  Letter letter;
  for (const auto& name : ap) letter.emplace(name, Poss::zero());
  for (const auto& [name, value] : v.items()) {
    lookup(ap, name, "proposition");
    letter[name] = as_poss(value, "letter." + name);
  }
  return letter;
}

}  // namespace

Gpks model_from_json(const json& doc) {
  std::vector<std::string> states = name_list(doc, "states");
  std::vector<std::string> ap = name_list(doc, "ap");
  const std::size_t n = states.size();

  FuzzyVector initial = state_map(doc, "initial", states, true);

  FuzzyMatrix trans(n, n);
  const json& transitions = member(doc, "transitions");
  if (!transitions.is_array()) format_error("\"transitions\" must be an array");
  for (const auto& t : transitions) {
    const std::size_t from = lookup(states, as_string(member(t, "from"), "transition.from"), "state");
    const std::size_t to = lookup(states, as_string(member(t, "to"), "transition.to"), "state");
    trans(from, to) = as_poss(member(t, "p"), "transition.p");
  }

  FuzzyMatrix labels(n, ap.size());
  if (auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_object()) format_error("\"labels\" must be an object");
    for (const auto& [state, entries] : it->items()) {
      const std::size_t s = lookup(states, state, "state");
      if (!entries.is_object()) format_error("labels of '" + state + "' must be an object");
      for (const auto& [name, value] : entries.items()) {
        labels(s, lookup(ap, name, "proposition")) = as_poss(value, "labels." + state + "." + name);
      }
    }
  }
  return Gpks(std::move(states), std::move(ap), std::move(trans), std::move(initial),
              std::move(labels));
}

nlohmann::ordered_json model_to_json(const Gpks& model) {
  nlohmann::ordered_json doc;
  doc["states"] = model.states();
  doc["ap"] = model.ap();
  nlohmann::ordered_json initial = nlohmann::ordered_json::object();
  for (std::size_t s = 0; s < model.size(); ++s) {
    if (!model.initial()[s].is_zero()) initial[model.states()[s]] = to_string(model.initial()[s]);
  }
  doc["initial"] = initial;
  nlohmann::ordered_json transitions = nlohmann::ordered_json::array();
  for (std::size_t s = 0; s < model.size(); ++s) {
    for (std::size_t t = 0; t < model.size(); ++t) {
      const Poss p = model.transition(s, t);
      if (p.is_zero()) continue;
      transitions.push_back(
          {{"from", model.states()[s]}, {"to", model.states()[t]}, {"p", to_string(p)}});
    }
  }
  doc["transitions"] = transitions;
  nlohmann::ordered_json labels = nlohmann::ordered_json::object();
  for (std::size_t s = 0; s < model.size(); ++s) {
    nlohmann::ordered_json entry = nlohmann::ordered_json::object();
    for (std::size_t a = 0; a < model.ap().size(); ++a) {
      if (!model.label(s, a).is_zero()) entry[model.ap()[a]] = to_string(model.label(s, a));
    }
    if (!entry.empty()) labels[model.states()[s]] = entry;
  }
  doc["labels"] = labels;
  return doc;
}

FuzzyAutomaton automaton_from_json(const json& doc) {
  FuzzyAutomaton a;
  a.states = name_list(doc, "states");
  a.ap = name_list(doc, "ap");
  if (auto it = doc.find("name"); it != doc.end()) a.name = as_string(*it, "name");

  const std::string mode = as_string(member(doc, "mode"), "mode");
  if (mode == "finite") {
    a.mode = AcceptanceMode::FiniteWord;
  } else if (mode == "buchi") {
    a.mode = AcceptanceMode::Buchi;
  } else {
    format_error("mode must be \"finite\" or \"buchi\", got \"" + mode + "\"");
  }

  a.initial = state_map(doc, "initial", a.states, true);
  a.final = state_map(doc, "final", a.states, true);

  const json& transitions = member(doc, "transitions");
  if (!transitions.is_array()) format_error("\"transitions\" must be an array");
  for (const auto& t : transitions) {
    GuardedTransition gt;
    gt.from = lookup(a.states, as_string(member(t, "from"), "transition.from"), "state");
    gt.to = lookup(a.states, as_string(member(t, "to"), "transition.to"), "state");
    const std::string guard = as_string(member(t, "guard"), "transition.guard");
    try {
      gt.guard = parse_guard(guard);
    } catch (const Error& e) {
      format_error("guard \"" + guard + "\": " + e.what());
    }
    for (const auto& atom : gt.guard.atoms()) lookup(a.ap, atom, "proposition");
    if (auto it = t.find("value"); it != t.end()) gt.value = as_poss(*it, "transition.value");
    a.transitions.push_back(std::move(gt));
  }

  if (auto it = doc.find("extra_letters"); it != doc.end()) {
    if (!it->is_array()) format_error("\"extra_letters\" must be an array");
    for (const auto& v : *it) a.extra_letters.push_back(letter_from_json(v, a.ap));
  }
  return a;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Format, path.string() + ": " + e.what());
  }
}

Gpks read_model(const std::filesystem::path& path) {
  const json doc = read_json_file(path);
  try {
    return model_from_json(doc);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Format) throw Error(ErrorKind::Format, path.string() + ": " + e.what());
    throw;
  }
}

void write_model(const std::filesystem::path& path, const Gpks& model) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << model_to_json(model).dump(2) << '\n';
  if (!out) throw Error(ErrorKind::Io, "error writing " + path.string());
}

FuzzyAutomaton read_automaton(const std::filesystem::path& path) {
  const json doc = read_json_file(path);
  try {
    FuzzyAutomaton a = automaton_from_json(doc);
    if (a.name.empty()) a.name = path.stem().string();
    return a;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Format) throw Error(ErrorKind::Format, path.string() + ": " + e.what());
    throw;
  }
}

}  // namespace possmc

#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "possmc/automaton.hpp"
#include "possmc/gpks.hpp"

namespace possmc {

// Decimals are JSON strings so that values survive serialization exactly.
// Omitted initial, transition and label entries are 0. Malformed documents
// raise Error(Format); unreadable files raise Error(Io).

Gpks model_from_json(const nlohmann::json& doc);
nlohmann::ordered_json model_to_json(const Gpks& model);

FuzzyAutomaton automaton_from_json(const nlohmann::json& doc);

nlohmann::json read_json_file(const std::filesystem::path& path);

Gpks read_model(const std::filesystem::path& path);
void write_model(const std::filesystem::path& path, const Gpks& model);

/// The automaton's name defaults to the file stem.
FuzzyAutomaton read_automaton(const std::filesystem::path& path);

}  // namespace possmc

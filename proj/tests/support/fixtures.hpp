#pragma once

#include <initializer_list>
#include <string>

#include "possmc/automaton.hpp"
#include "possmc/gpks.hpp"

namespace possmc::testing {

Poss p(const char* text);
FuzzyVector vec(std::initializer_list<const char*> entries);

/// The four-state example model with states s0..s3 and props a, b, c.
Gpks example_model();

/// Path of a file under the shipped models directory.
std::string model_path(const std::string& name);

}  // namespace possmc::testing

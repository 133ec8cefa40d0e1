#pragma once

#include <vector>

#include "possmc/formula.hpp"
#include "possmc/gpks.hpp"
#include "possmc/letter.hpp"

namespace possmc {

/// ||phi||(w) on an ultimately periodic word. Throws UnknownAtom when a letter
/// lacks one of the formula's propositions.
Poss language_eval(const Formula& phi, const UltimatelyPeriodicWord& w);

/// Values of phi at every folded position 0 .. |prefix|+|period|-1 of `w`.
std::vector<Poss> language_eval_positions(const Formula& phi, const UltimatelyPeriodicWord& w);

/// ||phi||_M(pi) = ||phi||(trace(pi)). Throws InvalidLasso.
Poss path_eval(const Gpks& model, const Formula& phi, const LassoPath& path);

}  // namespace possmc

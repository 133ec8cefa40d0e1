#pragma once

#include <map>
#include <string>
#include <vector>

#include "possmc/poss.hpp"

namespace possmc {

/// One symbol of the fuzzy alphabet: a degree for each atomic proposition.
using Letter = std::map<std::string, Poss, std::less<>>;

/// prefix . period^omega. The period is never empty.
struct UltimatelyPeriodicWord {
  std::vector<Letter> prefix;
  std::vector<Letter> period;

  std::size_t positions() const noexcept { return prefix.size() + period.size(); }
  /// Successor of a folded position: the last position wraps to the first
  /// position of the period.
  std::size_t successor(std::size_t pos) const noexcept {
    return pos + 1 < positions() ? pos + 1 : prefix.size();
  }
  const Letter& at(std::size_t pos) const {
    return pos < prefix.size() ? prefix[pos] : period[pos - prefix.size()];
  }
};

}  // namespace possmc

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "possmc/gpks.hpp"

namespace possmc {

struct OracleConfig {
  /// Defaults to |S|^2.
  std::optional<std::size_t> max_prefix;
  /// Defaults to |S|.
  std::optional<std::size_t> max_cycle;
  /// Paths from this state with full initial possibility; otherwise from
  /// every state weighted by I.
  std::optional<std::size_t> start;
  /// Skip representations that denote a path already produced: a prefix
  /// ending in the cycle's last state, and cycles that repeat a shorter word.
  bool canonical = true;
  /// A value some enumerated lasso is known to reach (for example the result
  /// under smaller bounds). The search starts from it instead of 0 (po) or
  /// 1 (ne), so walks that cannot beat it are pruned early.
  std::optional<Poss> incumbent;
};

struct ResolvedBounds {
  std::size_t max_prefix;
  std::size_t max_cycle;
};

/// Throws Range for zero bounds and UnknownState for a bad start.
ResolvedBounds resolve_bounds(const Gpks& model, const OracleConfig& cfg);

/// Called with each lasso and its possibility (I(s0), or 1 when a start state
/// is configured, min every transition including the cycle-closing one).
/// Return false to stop the enumeration.
using LassoVisitor = std::function<bool(const LassoPath&, Poss)>;

void for_each_lasso(const Gpks& model, const OracleConfig& cfg, const LassoVisitor& visit);

std::vector<LassoPath> enumerate_lassos(const Gpks& model, const OracleConfig& cfg);

using PathFunction = std::function<Poss(const LassoPath&)>;

/// max over lassos of min(possibility, f(lasso)).
Poss oracle_po(const Gpks& model, const OracleConfig& cfg, const PathFunction& f);

/// min over lassos of max(1 - possibility, f(lasso)).
Poss oracle_ne(const Gpks& model, const OracleConfig& cfg, const PathFunction& f);

}  // namespace possmc

#include "possmc/oracle.hpp"

#include <algorithm>

#include "possmc/error.hpp"

namespace possmc {

ResolvedBounds resolve_bounds(const Gpks& model, const OracleConfig& cfg) {
  const std::size_t n = model.size();
  ResolvedBounds b{cfg.max_prefix.value_or(n * n), cfg.max_cycle.value_or(n)};
  if (b.max_prefix == 0 || b.max_cycle == 0) {
    throw Error(ErrorKind::Range, "oracle bounds must be at least 1");
  }
  if (cfg.start && *cfg.start >= n) {
    throw Error(ErrorKind::UnknownState, "oracle start state out of range");
  }
  return b;
}

namespace {

bool primitive(const std::vector<std::size_t>& cycle) {
  const std::size_t n = cycle.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) repeats = cycle[i] == cycle[i - d];
    if (repeats) return false;
  }
  return true;
}

// Depth-first walk generation. `prune(running)` lets callers cut walks whose
// possibility can no longer matter.
class LassoWalker {
 public:
  LassoWalker(const Gpks& model, const OracleConfig& cfg,
              std::function<bool(Poss)> prune, const LassoVisitor& visit)
      : model_(model),
        cfg_(cfg),
        bounds_(resolve_bounds(model, cfg)),
        prune_(std::move(prune)),
        visit_(visit) {}

  void run() {
    for (std::size_t s = 0; s < model_.size(); ++s) {
      Poss start_poss;
      if (cfg_.start) {
        if (s != *cfg_.start) continue;
        start_poss = Poss::one();
      } else {
        start_poss = model_.initial()[s];
      }
      if (start_poss.is_zero()) continue;
      walk_.assign(1, s);
      running_.assign(1, start_poss);
      if (!extend()) return;
    }
  }

 private:
  // Emits every split of the current walk, then extends it. Returns false
  // once the visitor asked to stop.
  bool extend() {
    const std::size_t m = walk_.size();
    const Poss running = running_.back();
    if (prune_ && prune_(running)) return true;

    const std::size_t last = walk_.back();
    const std::size_t lowest = m > bounds_.max_cycle ? m - bounds_.max_cycle : 0;
    for (std::size_t i = lowest; i < m && i <= bounds_.max_prefix; ++i) {
      const Poss close = model_.transition(last, walk_[i]);
      if (close.is_zero()) continue;
      if (cfg_.canonical && i > 0 && walk_[i - 1] == last) continue;
      LassoPath lasso;
      lasso.prefix.assign(walk_.begin(), walk_.begin() + static_cast<std::ptrdiff_t>(i));
      lasso.cycle.assign(walk_.begin() + static_cast<std::ptrdiff_t>(i), walk_.end());
      if (cfg_.canonical && !primitive(lasso.cycle)) continue;
      if (!visit_(lasso, std::min(running, close))) return false;
    }

    if (m >= bounds_.max_prefix + bounds_.max_cycle) return true;
    for (std::size_t t = 0; t < model_.size(); ++t) {
      const Poss p = model_.transition(last, t);
      if (p.is_zero()) continue;
      walk_.push_back(t);
      running_.push_back(std::min(running, p));
      const bool go_on = extend();
      walk_.pop_back();
      running_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const Gpks& model_;
  const OracleConfig& cfg_;
  ResolvedBounds bounds_;
  std::function<bool(Poss)> prune_;
  const LassoVisitor& visit_;
  std::vector<std::size_t> walk_;
  std::vector<Poss> running_;
};

}  // namespace

void for_each_lasso(const Gpks& model, const OracleConfig& cfg, const LassoVisitor& visit) {
  LassoWalker(model, cfg, nullptr, visit).run();
}

std::vector<LassoPath> enumerate_lassos(const Gpks& model, const OracleConfig& cfg) {
  std::vector<LassoPath> out;
  for_each_lasso(model, cfg, [&](const LassoPath& lasso, Poss) {
    out.push_back(lasso);
    return true;
  });
  return out;
}

Poss oracle_po(const Gpks& model, const OracleConfig& cfg, const PathFunction& f) {
  Poss best = cfg.incumbent.value_or(Poss::zero());
  if (best.is_one()) return best;
  LassoVisitor visit = [&](const LassoPath& lasso, Poss poss) {
    if (poss > best) best = std::max(best, std::min(poss, f(lasso)));
    return !best.is_one();
  };
  LassoWalker(model, cfg, [&](Poss running) { return running <= best; }, visit).run();
  return best;
}

Poss oracle_ne(const Gpks& model, const OracleConfig& cfg, const PathFunction& f) {
  Poss best = cfg.incumbent.value_or(Poss::one());
  if (best.is_zero()) return best;
  LassoVisitor visit = [&](const LassoPath& lasso, Poss poss) {
    if (complement(poss) < best) best = std::min(best, std::max(complement(poss), f(lasso)));
    return !best.is_zero();
  };
  LassoWalker(model, cfg, [&](Poss running) { return complement(running) >= best; }, visit).run();
  return best;
}

}  // namespace possmc

#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "possmc/letter.hpp"
#include "possmc/poss.hpp"

namespace possmc {

enum class Comparison { Eq, Ne, Lt, Le, Gt, Ge };

/// Boolean predicate over one letter. A bare proposition `a` means a > 0.
class Guard {
 public:
  /// Matches every letter.
  Guard();

  static Guard any();
  static Guard compare(std::string ap, Comparison op, Poss constant);
  static Guard positive(std::string ap) { return compare(std::move(ap), Comparison::Gt, Poss::zero()); }
  static Guard negation(Guard g);
  static Guard conjunction(Guard l, Guard r);
  static Guard disjunction(Guard l, Guard r);

  /// Throws UnknownAtom if the letter lacks a referenced proposition.
  bool accepts(const Letter& letter) const;

  /// Referenced propositions in first-occurrence order.
  std::vector<std::string> atoms() const;

  std::string to_string() const;

  struct Node;  // implementation detail

 private:
  explicit Guard(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// g := term ("||" term)* ; term := factor ("&&" factor)* ;
/// factor := "!" factor | "(" g ")" | "any" | IDENT | IDENT OP NUMBER
/// Throws Error(Syntax) with an offset; constants outside [0,1] raise Range.
Guard parse_guard(std::string_view text);

}  // namespace possmc

#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace possmc {

enum class FormulaOp {
  True,
  Atom,
  Not,
  And,
  Or,
  Implies,
  Next,
  Eventually,
  BoundedEventually,
  Always,
  Until,
  BoundedUntil,
};

/// Immutable, shared GPoLTL syntax tree. Copies are cheap.
class Formula {
 public:
  static Formula tt();
  /// `false` is represented as !true.
  static Formula ff();
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula l, Formula r);
  static Formula disjunction(Formula l, Formula r);
  static Formula implication(Formula l, Formula r);
  static Formula next(Formula f);
  static Formula eventually(Formula f);
  static Formula bounded_eventually(unsigned bound, Formula f);
  static Formula always(Formula f);
  static Formula until(Formula l, Formula r);
  static Formula bounded_until(unsigned bound, Formula l, Formula r);

  FormulaOp op() const noexcept;
  const std::string& name() const;  // Atom only
  unsigned bound() const noexcept;  // bounded operators only
  std::size_t arity() const noexcept;
  const Formula& child(std::size_t i = 0) const;
  const Formula& left() const { return child(0); }
  const Formula& right() const { return child(1); }

  /// No temporal operator anywhere below.
  bool is_state_formula() const;
  /// Atom names in first-occurrence order.
  std::vector<std::string> atoms() const;
  std::size_t depth() const;

  /// Fully parenthesised concrete syntax accepted by parse_formula.
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses the ASCII concrete syntax
///   phi   := impl
///   impl  := or ("->" impl)?
///   or    := and ("|" and)*
///   and   := until ("&" until)*
///   until := unary (("U" | "U<=" INT) unary)*      right-associative
///   unary := ("!" | "X" | "F" | "G" | "F<=" INT)* primary
///   primary := "true" | "false" | IDENT | "(" phi ")"
/// Throws Error(Syntax) carrying the offending offset.
Formula parse_formula(std::string_view text);

}  // namespace possmc

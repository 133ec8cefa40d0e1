#include "possmc/guard.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "possmc/error.hpp"

namespace possmc {

struct Guard::Node {
  enum class Kind { Any, Compare, Not, And, Or } kind = Kind::Any;
  std::string ap;
  Comparison op = Comparison::Gt;
  Poss constant;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Guard::Node>;

}  // namespace

Guard::Guard() : node_(std::make_shared<const Node>()) {}

Guard Guard::any() { return Guard(); }

Guard Guard::compare(std::string ap, Comparison op, Poss constant) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Compare;
  n->ap = std::move(ap);
  n->op = op;
  n->constant = constant;
  return Guard(std::move(n));
}

Guard Guard::negation(Guard g) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Not;
  n->lhs = std::move(g.node_);
  return Guard(std::move(n));
}

Guard Guard::conjunction(Guard l, Guard r) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::And;
  n->lhs = std::move(l.node_);
  n->rhs = std::move(r.node_);
  return Guard(std::move(n));
}

Guard Guard::disjunction(Guard l, Guard r) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Or;
  n->lhs = std::move(l.node_);
  n->rhs = std::move(r.node_);
  return Guard(std::move(n));
}

namespace {

bool eval(const Guard::Node& n, const Letter& letter) {
  using K = Guard::Node::Kind;
  switch (n.kind) {
    case K::Any: return true;
    case K::Not: return !eval(*n.lhs, letter);
    case K::And: return eval(*n.lhs, letter) && eval(*n.rhs, letter);
    case K::Or: return eval(*n.lhs, letter) || eval(*n.rhs, letter);
    case K::Compare: break;
  }
  auto it = letter.find(n.ap);
  if (it == letter.end()) throw Error(ErrorKind::UnknownAtom, "letter has no proposition '" + n.ap + "'");
  const Poss x = it->second;
  switch (n.op) {
    case Comparison::Eq: return x == n.constant;
    case Comparison::Ne: return x != n.constant;
    case Comparison::Lt: return x < n.constant;
    case Comparison::Le: return x <= n.constant;
    case Comparison::Gt: return x > n.constant;
    case Comparison::Ge: return x >= n.constant;
  }
  return false;
}

void collect(const Guard::Node& n, std::vector<std::string>& out) {
  if (n.kind == Guard::Node::Kind::Compare) {
    if (std::find(out.begin(), out.end(), n.ap) == out.end()) out.push_back(n.ap);
    return;
  }
  if (n.lhs) collect(*n.lhs, out);
  if (n.rhs) collect(*n.rhs, out);
}

std::string_view op_text(Comparison op) {
  switch (op) {
    case Comparison::Eq: return "==";
    case Comparison::Ne: return "!=";
    case Comparison::Lt: return "<";
    case Comparison::Le: return "<=";
    case Comparison::Gt: return ">";
    case Comparison::Ge: return ">=";
  }
  return "?";
}

std::string print(const Guard::Node& n) {
  using K = Guard::Node::Kind;
  switch (n.kind) {
    case K::Any: return "any";
    case K::Not: return "!" + print(*n.lhs);
    case K::And: return "(" + print(*n.lhs) + " && " + print(*n.rhs) + ")";
    case K::Or: return "(" + print(*n.lhs) + " || " + print(*n.rhs) + ")";
    case K::Compare: break;
  }
  return "(" + n.ap + " " + std::string(op_text(n.op)) + " " + possmc::to_string(n.constant) + ")";
}

class GuardParser {
 public:
  explicit GuardParser(std::string_view text) : text_(text) {}

  Guard parse() {
    Guard g = disjunction();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Syntax, "guard: " + what + " at offset " + std::to_string(pos_), pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
  }

  Guard disjunction() {
    Guard g = conjunction();
    while (eat("||")) g = Guard::disjunction(std::move(g), conjunction());
    return g;
  }

  Guard conjunction() {
    Guard g = factor();
    while (eat("&&")) g = Guard::conjunction(std::move(g), factor());
    return g;
  }

  std::optional<Comparison> comparison() {
    skip_space();
    static constexpr std::pair<std::string_view, Comparison> kOps[] = {
        {"==", Comparison::Eq}, {"!=", Comparison::Ne}, {"<=", Comparison::Le},
        {">=", Comparison::Ge}, {"<", Comparison::Lt},  {">", Comparison::Gt}};
    for (const auto& [text, op] : kOps) {
      if (eat(text)) return op;
    }
    return std::nullopt;
  }

  Guard factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of guard");
    // "!" but not "!=" which can only follow an identifier.
    if (text_[pos_] == '!') {
      ++pos_;
      return Guard::negation(factor());
    }
    if (eat("(")) {
      Guard g = disjunction();
      if (!eat(")")) fail("expected ')'");
      return g;
    }
    if (!ident_start(text_[pos_])) fail("expected a proposition");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (name == "any") return Guard::any();
    auto op = comparison();
    if (!op) return Guard::positive(std::move(name));
    skip_space();
    const std::size_t num_start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
            text_[pos_] == '-' || text_[pos_] == '+')) {
      ++pos_;
    }
    if (num_start == pos_) fail("expected a number");
    Poss constant;
    try {
      constant = parse_poss(text_.substr(num_start, pos_ - num_start));
    } catch (const Error& e) {
      throw Error(e.kind(), std::string("guard constant: ") + e.what(), num_start);
    }
    return Guard::compare(std::move(name), *op, constant);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

bool Guard::accepts(const Letter& letter) const { return eval(*node_, letter); }

std::vector<std::string> Guard::atoms() const {
  std::vector<std::string> out;
  collect(*node_, out);
  return out;
}

std::string Guard::to_string() const { return print(*node_); }

Guard parse_guard(std::string_view text) { return GuardParser(text).parse(); }

}  // namespace possmc

#include "possmc/formula.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>

#include "possmc/error.hpp"

namespace possmc {

struct Formula::Node {
  FormulaOp op;
  std::string name;
  unsigned bound = 0;
  std::vector<Formula> children;
};

Formula Formula::tt() {
  static const Formula t(std::make_shared<const Node>(Node{FormulaOp::True, {}, 0, {}}));
  return t;
}

Formula Formula::ff() { return negation(tt()); }

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<const Node>(Node{FormulaOp::Atom, std::move(name), 0, {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{FormulaOp::Not, {}, 0, {std::move(f)}}));
}

Formula Formula::conjunction(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(
      Node{FormulaOp::And, {}, 0, {std::move(l), std::move(r)}}));
}

Formula Formula::disjunction(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(
      Node{FormulaOp::Or, {}, 0, {std::move(l), std::move(r)}}));
}

Formula Formula::implication(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(
      Node{FormulaOp::Implies, {}, 0, {std::move(l), std::move(r)}}));
}

Formula Formula::next(Formula f) {
  return Formula(std::make_shared<const Node>(Node{FormulaOp::Next, {}, 0, {std::move(f)}}));
}

Formula Formula::eventually(Formula f) {
  return Formula(
      std::make_shared<const Node>(Node{FormulaOp::Eventually, {}, 0, {std::move(f)}}));
}

Formula Formula::bounded_eventually(unsigned bound, Formula f) {
  return Formula(std::make_shared<const Node>(
      Node{FormulaOp::BoundedEventually, {}, bound, {std::move(f)}}));
}

Formula Formula::always(Formula f) {
  return Formula(
      std::make_shared<const Node>(Node{FormulaOp::Always, {}, 0, {std::move(f)}}));
}

Formula Formula::until(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(
      Node{FormulaOp::Until, {}, 0, {std::move(l), std::move(r)}}));
}

Formula Formula::bounded_until(unsigned bound, Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(
      Node{FormulaOp::BoundedUntil, {}, bound, {std::move(l), std::move(r)}}));
}

FormulaOp Formula::op() const noexcept { return node_->op; }
const std::string& Formula::name() const { return node_->name; }
unsigned Formula::bound() const noexcept { return node_->bound; }
std::size_t Formula::arity() const noexcept { return node_->children.size(); }
const Formula& Formula::child(std::size_t i) const { return node_->children.at(i); }

bool Formula::is_state_formula() const {
  switch (op()) {
    case FormulaOp::True:
    case FormulaOp::Atom:
      return true;
    case FormulaOp::Not:
    case FormulaOp::And:
    case FormulaOp::Or:
    case FormulaOp::Implies:
      return std::ranges::all_of(node_->children,
                                 [](const Formula& c) { return c.is_state_formula(); });
    default:
      return false;
  }
}

std::vector<std::string> Formula::atoms() const {
  std::vector<std::string> out;
  std::vector<const Formula*> stack{this};
  while (!stack.empty()) {
    const Formula* f = stack.back();
    stack.pop_back();
    if (f->op() == FormulaOp::Atom) {
      if (std::ranges::find(out, f->name()) == out.end()) out.push_back(f->name());
    }
    for (auto it = f->node_->children.rbegin(); it != f->node_->children.rend(); ++it)
      stack.push_back(&*it);
  }
  return out;
}

std::size_t Formula::depth() const {
  std::size_t d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.depth());
  return d + 1;
}

std::string Formula::to_string() const {
  switch (op()) {
    case FormulaOp::True: return "true";
    case FormulaOp::Atom: return name();
    case FormulaOp::Not: return "!" + child().to_string();
    case FormulaOp::Next: return "X " + child().to_string();
    case FormulaOp::Eventually: return "F " + child().to_string();
    case FormulaOp::Always: return "G " + child().to_string();
    case FormulaOp::BoundedEventually:
      return "F<=" + std::to_string(bound()) + " " + child().to_string();
    case FormulaOp::And:
      return "(" + left().to_string() + " & " + right().to_string() + ")";
    case FormulaOp::Or:
      return "(" + left().to_string() + " | " + right().to_string() + ")";
    case FormulaOp::Implies:
      return "(" + left().to_string() + " -> " + right().to_string() + ")";
    case FormulaOp::Until:
      return "(" + left().to_string() + " U " + right().to_string() + ")";
    case FormulaOp::BoundedUntil:
      return "(" + left().to_string() + " U<=" + std::to_string(bound()) + " " +
             right().to_string() + ")";
  }
  return {};
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op() || a.bound() != b.bound() || a.name() != b.name() ||
      a.arity() != b.arity())
    return false;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!(a.child(i) == b.child(i))) return false;
  return true;
}

namespace {

enum class Tok {
  End, Ident, True, False, Not, Next, Finally, Globally, BoundedFinally,
  Until, BoundedUntil, And, Or, Implies, LParen, RParen,
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
  unsigned bound = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      if (i_ >= src_.size()) {
        out.push_back({Tok::End, i_, {}});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  void skip_space() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  // After F or U: an optional "<=" INT suffix, possibly separated by blanks.
  std::optional<unsigned> bound_suffix() {
    std::size_t j = i_;
    while (j < src_.size() && src_[j] == ' ') ++j;
    if (src_.substr(j, 2) != "<=") return std::nullopt;
    j += 2;
    while (j < src_.size() && src_[j] == ' ') ++j;
    const std::size_t digits_begin = j;
    std::uint64_t value = 0;
    while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) {
      value = value * 10 + static_cast<unsigned>(src_[j] - '0');
      if (value > std::numeric_limits<unsigned>::max()) {
        throw Error(ErrorKind::Syntax, "step bound too large", digits_begin);
      }
      ++j;
    }
    if (j == digits_begin) throw Error(ErrorKind::Syntax, "expected step bound after '<='", j);
    i_ = j;
    return static_cast<unsigned>(value);
  }

  Token next() {
    const std::size_t start = i_;
    const char c = src_[i_];
    if (ident_start(c)) {
      while (i_ < src_.size() && ident_char(src_[i_])) ++i_;
      const std::string word(src_.substr(start, i_ - start));
      if (word == "true") return {Tok::True, start, word};
      if (word == "false") return {Tok::False, start, word};
      if (word == "X") return {Tok::Next, start, word};
      if (word == "G") return {Tok::Globally, start, word};
      if (word == "F") {
        if (auto b = bound_suffix()) return {Tok::BoundedFinally, start, word, *b};
        return {Tok::Finally, start, word};
      }
      if (word == "U") {
        if (auto b = bound_suffix()) return {Tok::BoundedUntil, start, word, *b};
        return {Tok::Until, start, word};
      }
      return {Tok::Ident, start, word};
    }
    ++i_;
    switch (c) {
      case '!': return {Tok::Not, start, "!"};
      case '&': return {Tok::And, start, "&"};
      case '|': return {Tok::Or, start, "|"};
      case '(': return {Tok::LParen, start, "("};
      case ')': return {Tok::RParen, start, ")"};
      case '-':
        if (i_ < src_.size() && src_[i_] == '>') {
          ++i_;
          return {Tok::Implies, start, "->"};
        }
        break;
      default:
        break;
    }
    throw Error(ErrorKind::Syntax, std::string("unexpected character '") + c + "'", start);
  }

  std::string_view src_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Formula parse() {
    Formula f = implication();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return toks_[k_]; }
  Token take() { return toks_[k_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Syntax, msg + " at offset " + std::to_string(peek().pos),
                peek().pos);
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::Implies) {
      take();
      return Formula::implication(std::move(lhs), implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (peek().kind == Tok::Or) {
      take();
      lhs = Formula::disjunction(std::move(lhs), conjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = until();
    while (peek().kind == Tok::And) {
      take();
      lhs = Formula::conjunction(std::move(lhs), until());
    }
    return lhs;
  }

  Formula until() {
    Formula lhs = unary();
    const Token& t = peek();
    if (t.kind == Tok::Until) {
      take();
      return Formula::until(std::move(lhs), until());
    }
    if (t.kind == Tok::BoundedUntil) {
      const unsigned b = take().bound;
      return Formula::bounded_until(b, std::move(lhs), until());
    }
    return lhs;
  }

  Formula unary() {
    switch (peek().kind) {
      case Tok::Not: take(); return Formula::negation(unary());
      case Tok::Next: take(); return Formula::next(unary());
      case Tok::Finally: take(); return Formula::eventually(unary());
      case Tok::Globally: take(); return Formula::always(unary());
      case Tok::BoundedFinally: {
        const unsigned b = take().bound;
        return Formula::bounded_eventually(b, unary());
      }
      default: return primary();
    }
  }

  Formula primary() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::True: take(); return Formula::tt();
      case Tok::False: take(); return Formula::ff();
      case Tok::Ident: take(); return Formula::atom(t.text);
      case Tok::LParen: {
        take();
        Formula inner = implication();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        take();
        return inner;
      }
      case Tok::End: fail("unexpected end of formula");
      default: fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  return Parser(Lexer(text).run()).parse();
}

}  // namespace possmc

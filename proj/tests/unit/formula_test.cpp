#include <gtest/gtest.h>

#include "possmc/error.hpp"
#include "possmc/formula.hpp"
#include "random_models.hpp"

namespace possmc {
namespace {

const Formula a = Formula::atom("a");
const Formula b = Formula::atom("b");
const Formula c = Formula::atom("c");

TEST(Parser, Examples) {
  EXPECT_EQ(parse_formula("F (a & b)"), Formula::eventually(Formula::conjunction(a, b)));
  EXPECT_EQ(parse_formula("a U b & c"), Formula::conjunction(Formula::until(a, b), c));
  const Formula br = parse_formula("F<=7 br");
  EXPECT_EQ(br, Formula::bounded_eventually(7, Formula::atom("br")));
  EXPECT_EQ(br.bound(), 7u);
}

TEST(Parser, Precedence) {
  EXPECT_EQ(parse_formula("a U b U c"), Formula::until(a, Formula::until(b, c)));
  EXPECT_EQ(parse_formula("a -> b -> c"), Formula::implication(a, Formula::implication(b, c)));
  EXPECT_EQ(parse_formula("a | b & c"), Formula::disjunction(a, Formula::conjunction(b, c)));
  EXPECT_EQ(parse_formula("!a U X b"), Formula::until(Formula::negation(a), Formula::next(b)));
  EXPECT_EQ(parse_formula("G F a"), Formula::always(Formula::eventually(a)));
  EXPECT_EQ(parse_formula("a U<=3 b"), Formula::bounded_until(3, a, b));
  EXPECT_EQ(parse_formula("a U <= 3 b"), Formula::bounded_until(3, a, b));
  EXPECT_EQ(parse_formula("false"), Formula::ff());
  EXPECT_EQ(parse_formula("(a)"), a);
  EXPECT_EQ(parse_formula("Fa"), Formula::atom("Fa"));
}

TEST(Parser, Errors) {
  for (const char* bad : {"", "a &", "(a", "a b", "F<= a", "a U<=x b", "&", "a ->"}) {
    try {
      parse_formula(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Syntax) << bad;
      EXPECT_TRUE(e.position().has_value()) << bad;
    }
  }
}

TEST(Formula, Queries) {
  const Formula f = parse_formula("G (a -> F b) & c");
  EXPECT_FALSE(f.is_state_formula());
  EXPECT_TRUE(parse_formula("a -> !b | true").is_state_formula());
  EXPECT_EQ(f.atoms(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(parse_formula("X X a").depth(), 3u);
}

class ParserRoundTrip : public ::testing::TestWithParam<int> {};

TEST_P(ParserRoundTrip, PrettyPrintReparses) {
  testing::Generator gen(static_cast<std::uint64_t>(GetParam()));
  const Formula f = gen.formula(4, {"a", "b", "c"});
  EXPECT_EQ(parse_formula(f.to_string()), f) << f.to_string();
}

INSTANTIATE_TEST_SUITE_P(Random, ParserRoundTrip, ::testing::Range(0, 50));

}  // namespace
}  // namespace possmc

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "possmc/error.hpp"
#include "possmc/guard.hpp"
#include "random_models.hpp"

namespace possmc {
namespace {

using testing::p;

Letter letter(const char* a, const char* b) { return Letter{{"a", p(a)}, {"b", p(b)}}; }

TEST(Guard, Shorthands) {
  EXPECT_TRUE(parse_guard("a").accepts(letter("0.1", "0")));
  EXPECT_FALSE(parse_guard("a").accepts(letter("0", "1")));
  EXPECT_TRUE(parse_guard("!a").accepts(letter("0", "1")));
  EXPECT_FALSE(parse_guard("!a").accepts(letter("0.5", "1")));
  EXPECT_TRUE(parse_guard("any").accepts(letter("0", "0")));
}

TEST(Guard, Comparisons) {
  const Letter l = letter("0.5", "0.3");
  EXPECT_TRUE(parse_guard("a == 0.5").accepts(l));
  EXPECT_TRUE(parse_guard("a != 0.3").accepts(l));
  EXPECT_TRUE(parse_guard("b < 0.5").accepts(l));
  EXPECT_TRUE(parse_guard("b <= 0.3").accepts(l));
  EXPECT_FALSE(parse_guard("a > 0.5").accepts(l));
  EXPECT_TRUE(parse_guard("a >= 0.5 && (b > 0.9 || !b == 0)").accepts(l));
  EXPECT_FALSE(parse_guard("a>=0.5&&b>0.9").accepts(l));
}

TEST(Guard, PrecedenceAndAtoms) {
  const Guard g = parse_guard("a || b && !a");
  EXPECT_TRUE(g.accepts(letter("1", "0")));
  EXPECT_FALSE(g.accepts(letter("0", "0")));
  EXPECT_EQ(g.atoms(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(parse_guard(g.to_string()).to_string(), g.to_string());
}

TEST(Guard, Errors) {
  for (const char* bad : {"", "a &&", "(a", "a > ", "a >> 1", "&& a", "a b"}) {
    try {
      parse_guard(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Syntax) << bad;
    }
  }
  EXPECT_THROW(parse_guard("a > 2"), Error);
  EXPECT_THROW(parse_guard("zz").accepts(letter("0", "0")), Error);
}

TEST(Guard, ShorthandLawsOnRandomLetters) {
  testing::Generator gen(3);
  for (int i = 0; i < 200; ++i) {
    const Letter l = gen.letter({"a", "b"});
    EXPECT_EQ(parse_guard("a").accepts(l), parse_guard("a > 0").accepts(l));
    EXPECT_EQ(parse_guard("!a").accepts(l), parse_guard("a == 0").accepts(l));
  }
}

}  // namespace
}  // namespace possmc

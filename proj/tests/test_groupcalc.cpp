#include <gtest/gtest.h>

#include "properties.hpp"

using namespace twalex;

namespace {

Word W(std::initializer_list<Letter> l) { return Word(std::vector<Letter>(l)); }

}  // namespace

TEST(Word, FreeReduction) {
  EXPECT_TRUE(W({{0, 1}, {1, 1}, {1, -1}, {0, -1}}).empty());
  EXPECT_EQ(W({{0, 1}, {1, 1}, {1, -1}, {1, -1}}), W({{0, 1}, {1, -1}}));
  props::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Word u = props::random_word(rng, 3, 12);
    EXPECT_EQ(Word(u.letters()), u);
    EXPECT_TRUE((u * u.inverse()).empty());
    EXPECT_EQ(free_reduce(free_reduce(u.letters())), free_reduce(u.letters()));
  }
  EXPECT_EQ(Word::generator(0, 3).exponent_sum(), 3);
  EXPECT_EQ(Word::generator(1, -2).pow(-2), Word::generator(1, 4));
}

TEST(Fox, SpecExamples) {
  const Word x = Word::generator(0), y = Word::generator(1);
  EXPECT_EQ(fox_derivative(x, 0), GroupRingElem::one());
  EXPECT_EQ(fox_derivative(x.inverse(), 0), GroupRingElem(x.inverse(), -1));
  // d(xyx^-1)/dx = 1 - xyx^-1
  EXPECT_EQ(fox_derivative(x * y * x.inverse(), 0), GroupRingElem::one() - GroupRingElem(x * y * x.inverse()));
  EXPECT_TRUE(fox_derivative(y, 0).is_zero());
}

TEST(Fox, ProductRuleFundamentalIdentityAndOracle) {
  const auto o = props::fox_properties(7, 500);
  EXPECT_TRUE(o.ok) << o.failure;
  EXPECT_GT(o.cases, 500u);
}

TEST(Presentation, ParsesBothInverseNotations) {
  const Presentation a = parse_presentation("gens: x y\nrel: x y X^1 Y\n");
  const Presentation b = parse_presentation("# comment\ngens: x y\nrel: x y^1 x^-1 y^-1   # trailing\n");
  ASSERT_EQ(a.relators.size(), 1u);
  EXPECT_EQ(a.relators, b.relators);
  EXPECT_EQ(parse_presentation("gens: x\nrel: x\n").relators.size(), 1u);
  EXPECT_EQ(parse_presentation("gens: x y\nrel: x^3 Y^-2\n").relators[0], Word::generator(0, 3) * Word::generator(1, 2));
}

TEST(Presentation, RoundTrip) {
  for (const char* name : {"8_5", "10_145", "10_159"}) {
    const Presentation p = load_presentation(std::string(TWALEX_DATA) + "/" + name + ".pres");
    EXPECT_EQ(p.generators.size(), 3u);
    EXPECT_EQ(p.relators.size(), 2u);
    const Presentation q = parse_presentation(p.to_string());
    EXPECT_EQ(q.generators, p.generators);
    EXPECT_EQ(q.relators, p.relators);
  }
}

TEST(Presentation, ErrorsCarryLineAndColumn) {
  try {
    parse_presentation("gens: x y\nrel: x q\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 8);
  }
  EXPECT_THROW(parse_presentation("gens: x y\nrel: x^0\n"), ParseError);
  EXPECT_THROW(parse_presentation("gens: x y\nrel: x^a\n"), ParseError);
  EXPECT_THROW(parse_presentation("gens: x y\nrel:\n"), ParseError);
  EXPECT_THROW(parse_presentation("gens: x y\nrel: x X\n"), ParseError);
  EXPECT_THROW(parse_presentation("gens: x x\n"), ParseError);
  EXPECT_THROW(parse_presentation("rel: x\n"), ParseError);
  EXPECT_THROW(parse_presentation("gens: x\nfoo: x\n"), ParseError);
}

TEST(Presentation, Deficiency) {
  const Presentation p = parse_presentation("gens: x y z\nrel: x y X Y\n");
  EXPECT_FALSE(p.has_deficiency_one());
  EXPECT_THROW(p.require_deficiency_one(), std::invalid_argument);
}

#include <gtest/gtest.h>

#include "epilat/term.hpp"
#include "gen.hpp"

using namespace epilat;

TEST(Parse, ProductsAndInverses) {
  Term t = parse_term("x y x");
  ASSERT_EQ(t.factor_count(), 3u);
  EXPECT_TRUE(t.is_semigroup_word());
  Term i = parse_term("~(x)");
  ASSERT_EQ(i.factor_count(), 1u);
  EXPECT_TRUE(i.factors()[0].is_inverse());
  EXPECT_EQ(i.str(), "~(x)");
}

TEST(Parse, OmegaSugar) {
  EXPECT_EQ(parse_term("(x)^w"), parse_term("x ~(x)"));
  EXPECT_EQ(parse_term("(x y)^w"), parse_term("x y ~(x y)"));
  EXPECT_EQ(parse_term("x^w y"), parse_term("x ~(x) y"));
}

TEST(Parse, PowersAndGrouping) {
  EXPECT_EQ(parse_term("x^3"), parse_term("x x x"));
  EXPECT_EQ(parse_term("(x y)^2"), parse_term("x y x y"));
  EXPECT_EQ(parse_term("x (y z)"), parse_term("x y z"));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_term(""), ParseError);
  EXPECT_THROW(parse_term("x ~("), ParseError);
  EXPECT_THROW(parse_term("x )"), ParseError);
  EXPECT_THROW(parse_identity("x y"), ParseError);
  try {
    parse_term("x $");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Parse, ZeroIdentity) {
  Identity id = parse_identity("x x y = 0");
  EXPECT_TRUE(id.is_zero());
  EXPECT_EQ(id.str(), "x x y = 0");
}

TEST(Stats, Word) {
  auto s = term_stats(parse_term("x y x"));
  EXPECT_EQ(s.content, (std::set<Symbol>{"x", "y"}));
  EXPECT_EQ(s.length, 3u);
  EXPECT_EQ(s.last_letter, "x");
  EXPECT_EQ(s.simple_letters, std::set<Symbol>{"y"});
  EXPECT_EQ(s.multiple_letters, std::set<Symbol>{"x"});
  EXPECT_FALSE(s.is_linear);
}

TEST(Stats, NonSemigroupWordHasInfiniteLength) {
  auto s = term_stats(parse_term("~(x) y"));
  EXPECT_FALSE(s.length.has_value());
  EXPECT_FALSE(s.is_semigroup_word);
  EXPECT_EQ(s.content, (std::set<Symbol>{"x", "y"}));
}

TEST(Stats, Linear) {
  auto s = term_stats(linear_word(3));
  EXPECT_TRUE(s.is_linear);
  EXPECT_EQ(s.simple_letters, (std::set<Symbol>{"x1", "x2", "x3"}));
}

TEST(Classify, Examples) {
  auto c = classify_identity(parse_identity("x y = y x"));
  EXPECT_TRUE(c.substitutive);
  EXPECT_TRUE(c.permutative);
  EXPECT_TRUE(c.strongly_permutative);
  EXPECT_TRUE(c.balanced);
  auto d = classify_identity(parse_identity("x x y = x y y"));
  // x occurs twice on the left and once on the right.
  EXPECT_FALSE(d.balanced);
  EXPECT_FALSE(d.substitutive);
  EXPECT_TRUE(classify_identity(parse_identity("x x y = y x x")).balanced);
  EXPECT_TRUE(classify_identity(parse_identity("x x y = 0")).zero_reduced);
  EXPECT_EQ(classify_identity(parse_identity("x = ~(~(x))")).kind, IdentityKind::Mixed);
  EXPECT_FALSE(classify_identity(parse_identity("x y z = y x z")).strongly_permutative);
}

TEST(KSigma, Examples) {
  EXPECT_FALSE(k_sigma_is_variety({parse_identity("x y = y x")}));
  EXPECT_TRUE(k_sigma_is_variety({parse_identity("x = ~(~(x))")}));
  EXPECT_TRUE(k_sigma_is_variety({parse_identity("x x y = 0")}));
}

TEST(Substitute, Examples) {
  EXPECT_EQ(substitute(parse_term("x x"), {{"x", parse_term("x y")}}), parse_term("x y x y"));
  EXPECT_EQ(substitute(parse_term("~(x)"), {{"x", parse_term("y")}}), parse_term("~(y)"));
  EXPECT_EQ(substitute(parse_term("x x y"), {{"x", parse_term("x")}, {"y", parse_term("x")}}), parse_term("x x x"));
  EXPECT_THROW(substitute(parse_term("x y"), {{"x", parse_term("y")}}), Error);
}

TEST(ExpandZero, FreshLetter) {
  auto ids = expand_zero(parse_identity("z x = 0"));
  ASSERT_EQ(ids.size(), 2u);
  for (const auto& id : ids) {
    EXPECT_FALSE(id.is_zero());
    EXPECT_EQ(*id.rhs, parse_term("z x"));
    EXPECT_EQ(content(id.lhs).size(), 3u);
  }
}

TEST(Match, Examples) {
  auto m = match_instance(parse_term("x x"), parse_term("x y x y"));
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].at("x"), parse_term("x y"));
  auto m2 = match_instance(parse_term("x x y"), parse_term("x x x"));
  ASSERT_EQ(m2.size(), 1u);
  EXPECT_EQ(m2[0].at("y"), parse_term("x"));
  EXPECT_TRUE(match_instance(parse_term("x y"), parse_term("~(x)")).empty());
  EXPECT_TRUE(has_instance_factor(parse_term("x x"), parse_term("y z z y")));
  EXPECT_FALSE(has_instance_factor(parse_term("x x"), parse_term("y z y")));
}

// Properties over random terms.

TEST(TermProperty, PrintParseRoundTrip) {
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Term t = gen::term(rng, 3, 5, 2);
    EXPECT_EQ(parse_term(t.str()), t) << t.str();
  }
}

TEST(TermProperty, SubstitutionIsRecoveredByMatching) {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    Term p = gen::term(rng, 2, 4, 1);
    Substitution s;
    for (const auto& l : content(p)) s.emplace(l, gen::term(rng, 3, 3, 1));
    Term t = substitute(p, s);
    auto ms = match_instance(p, t);
    EXPECT_TRUE(std::find(ms.begin(), ms.end(), s) != ms.end()) << p.str() << " -> " << t.str();
    for (const auto& m : ms) EXPECT_EQ(substitute(p, m), t);
  }
}

TEST(TermProperty, ContentOfSubstitution) {
  std::mt19937 rng(13);
  for (int i = 0; i < 500; ++i) {
    Term p = gen::term(rng, 3, 4, 1);
    Substitution s;
    std::set<Symbol> expect;
    for (const auto& l : content(p)) {
      Term img = gen::term(rng, 2, 2, 0);
      auto c = content(img);
      expect.insert(c.begin(), c.end());
      s.emplace(l, img);
    }
    EXPECT_EQ(content(substitute(p, s)), expect);
  }
}

TEST(TermProperty, SymbolCountAndDepth) {
  std::mt19937 rng(17);
  for (int i = 0; i < 500; ++i) {
    Term t = gen::term(rng, 3, 4, 2);
    Term inv = Term::inverse(t);
    EXPECT_EQ(inv.symbol_count(), t.symbol_count() + 1);
    EXPECT_EQ(inv.inverse_depth(), t.inverse_depth() + 1);
    EXPECT_EQ(Term::product(t, t).symbol_count(), 2 * t.symbol_count());
  }
}

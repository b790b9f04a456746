#include <gtest/gtest.h>

#include "epilat/enumerate.hpp"
#include "epilat/formula.hpp"
#include "epilat/lattice.hpp"

using namespace epilat;

TEST(Formula, NeutralOnM3) {
  auto m3 = lattice_m3();
  auto set = defined_set(m3, parse_formula(definitional_formula(Special::Neutral)));
  EXPECT_EQ(set, (std::set<Node>{m3.bottom(), m3.top()}));
}

TEST(Formula, BottomIsDefinable) {
  auto f = parse_formula("forall y. x /\\ y = x");
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : enumerate_lattices(n)) EXPECT_EQ(defined_set(l, f), std::set<Node>{l.bottom()});
}

TEST(Formula, LowerModularOnN5) {
  auto n5 = lattice_n5();
  auto set = defined_set(n5, parse_formula(definitional_formula(Special::LowerModular)));
  std::set<Node> expect;
  for (Node x = 0; x < n5.size(); ++x)
    if (special_profile(n5, x).has(Special::LowerModular)) expect.insert(x);
  EXPECT_EQ(set, expect);
}

TEST(Formula, Connectives) {
  auto c = chain(3);
  EXPECT_TRUE(fo_eval(c, parse_formula("forall x y. x <= y or y <= x")));
  EXPECT_FALSE(fo_eval(boolean_square(), parse_formula("forall x y. x <= y or y <= x")));
  EXPECT_TRUE(fo_eval(c, parse_formula("exists x. not (x = x /\\ x) -> x != x")));
  EXPECT_TRUE(fo_eval(c, parse_formula("forall x. (x <= x <-> x = x) and x \\/ x = x")));
  EXPECT_TRUE(fo_eval(lattice_m3(), parse_formula("exists x y z. x != y and y != z and x != z and x \\/ y = y \\/ z "
                                                  "and x /\\ y = y /\\ z")));
}

TEST(Formula, MeetBindsTighter) {
  auto f = parse_formula("x \\/ y /\\ z = x \\/ (y /\\ z)");
  auto n5 = lattice_n5();
  for (Node a = 0; a < 5; ++a)
    for (Node b = 0; b < 5; ++b)
      for (Node d = 0; d < 5; ++d) EXPECT_TRUE(fo_eval(n5, f, {{"x", a}, {"y", b}, {"z", d}}));
}

TEST(Formula, Errors) {
  EXPECT_THROW(fo_eval(chain(2), parse_formula("x = y")), Error);
  EXPECT_THROW(parse_formula("forall . x = x"), Error);
  EXPECT_THROW(parse_formula("x = "), Error);
  EXPECT_EQ(parse_formula("forall y. x <= y").free_variables(), std::set<std::string>{"x"});
}

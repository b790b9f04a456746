#include <gtest/gtest.h>

#include "epilat/epigroup.hpp"
#include "epilat/variety.hpp"
#include "gen.hpp"

using namespace epilat;

namespace {

bool holds(const char* v, const char* id) { return decide(parse_variety(v), parse_identity(id)); }
bool in(const char* v, const char* w) { return contains(parse_variety(v), parse_variety(w)); }

} // namespace

TEST(Registry, NamesRoundTrip) {
  for (const char* n : {"T", "SL", "ZM", "LZ", "RZ", "LZM", "RZM", "P", "Pbar", "C(2)", "A(3)", "Q", "Q(4)", "R",
                        "R(5)", "I", "I(4)", "J", "J(4)", "K", "K(3)", "L", "L(5)", "W(3)"})
    EXPECT_EQ(parse_variety(n).name(), n);
  EXPECT_EQ(parse_variety("zr[x x y; y x x]").family, Family::ZR);
  EXPECT_THROW(parse_variety("K(2)"), Error);
  EXPECT_THROW(parse_variety("Foo"), Error);
  EXPECT_THROW(parse_variety("zr[x y"), Error);
}

TEST(Decide, Examples) {
  EXPECT_TRUE(holds("SL", "x y ~(z) = z y x"));
  EXPECT_FALSE(holds("C(2)", "x = x x"));
  EXPECT_TRUE(holds("P", "x y = x x y"));
  EXPECT_FALSE(holds("P", "x y = y x"));
  EXPECT_TRUE(holds("Q", "x y x = 0"));
  EXPECT_FALSE(holds("Q", "x x = 0"));
  EXPECT_TRUE(holds("A(2)", "x y x = y"));
  EXPECT_TRUE(holds("A(2)", "x = x x x"));
  EXPECT_TRUE(holds("K", "x x x = 0"));
  EXPECT_FALSE(holds("I", "x x y = 0"));
}

TEST(NormalForm, Examples) {
  EXPECT_FALSE(normal_form(make_variety(Family::I), parse_term("x z y x")).has_value());
  EXPECT_FALSE(normal_form(make_variety(Family::K), parse_term("x x x")).has_value());
  EXPECT_TRUE(normal_form(make_variety(Family::Q), parse_term("x x")).has_value());
  EXPECT_FALSE(normal_form(make_variety(Family::Q), parse_term("~(x)")).has_value());
}

TEST(Contains, Examples) {
  EXPECT_TRUE(in("I", "K"));
  EXPECT_FALSE(in("K", "I"));
  EXPECT_TRUE(in("Q", "ZM"));
  EXPECT_FALSE(in("A(2)", "A(4)"));
  EXPECT_TRUE(in("A(4)", "A(2)"));
  EXPECT_TRUE(in("J(4)", "K(3)"));
  EXPECT_TRUE(contains_atom(parse_variety("C(2)"), Atom::SL));
  EXPECT_FALSE(contains_atom(parse_variety("A(3)"), Atom::ZM));
  EXPECT_TRUE(contains_atom(parse_variety("Q"), Atom::ZM));
}

TEST(Degree, Examples) {
  EXPECT_EQ(degree(parse_variety("L(5)")), 5);
  EXPECT_EQ(degree(parse_variety("L")), std::nullopt);
  EXPECT_EQ(degree(parse_variety("ZM")), 2);
  EXPECT_EQ(degree(parse_variety("P")), 2);
  EXPECT_EQ(degree(parse_variety("Pbar")), 2);
  EXPECT_EQ(degree(parse_variety("SL")), 1);
  EXPECT_EQ(degree(parse_variety("C(2)")), std::nullopt);
}

TEST(Oracle, SmallSweeps) {
  OracleBounds b{4, 2, 1, 0};
  for (const char* v : {"SL", "C(2)", "ZM", "A(2)", "A(3)"}) {
    auto r = oracle_check(parse_variety(v), b);
    EXPECT_TRUE(r.two_sided) << v;
    EXPECT_TRUE(r.mismatches.empty()) << v << ": " << (r.mismatches.empty() ? "" : r.mismatches[0]);
  }
  auto q = oracle_check(parse_variety("Q"), b);
  EXPECT_FALSE(q.two_sided);
  EXPECT_GT(q.models, 0u);
  EXPECT_TRUE(q.mismatches.empty());
}

// Generators against random identities: an independent evaluation of both sides.
TEST(VarietyProperty, DecideAgreesWithGenerators) {
  std::mt19937 rng(23);
  std::vector<std::pair<const char*, FiniteEpigroup>> gens = {
      {"SL", builtin("SL2")}, {"ZM", builtin("NULL2")}, {"LZ", builtin("LZ2")}, {"RZ", builtin("RZ2")},
      {"C(2)", builtin("Cm", 2)}, {"C(3)", builtin("Cm", 3)}, {"A(3)", builtin("Zn", 3)}, {"A(4)", builtin("Zn", 4)}};
  for (const auto& [name, g] : gens) {
    VarietyId v = parse_variety(name);
    for (int i = 0; i < 300; ++i) {
      Identity id{gen::term(rng, 3, 4, 2), gen::term(rng, 3, 4, 2)};
      EXPECT_EQ(decide(v, id), satisfies(g, id)) << name << ": " << id.str();
    }
  }
}

TEST(VarietyProperty, KeysAreStableUnderSubstitution) {
  std::mt19937 rng(29);
  for (const auto& v : registry_sample(5)) {
    for (int i = 0; i < 60; ++i) {
      Term u = gen::term(rng, 2, 4, 1);
      Term w = gen::term(rng, 2, 4, 1);
      if (normal_key(v, u) != normal_key(v, w)) continue;
      Substitution s{{"x", gen::term(rng, 3, 2, 1)}, {"y", gen::term(rng, 3, 2, 1)}};
      EXPECT_TRUE(decide(v, Identity{substitute(u, s), substitute(w, s)})) << v.name() << ": " << u.str() << " = "
                                                                            << w.str();
    }
  }
}

TEST(VarietyProperty, ContainmentIsAPreorderAndMatchesBases) {
  auto reg = registry_sample(5);
  for (const auto& a : reg) {
    EXPECT_TRUE(contains(a, a)) << a.name();
    for (const auto& b : reg) {
      bool by_basis = true;
      for (const auto& id : basis(a)) by_basis = by_basis && decide(b, id);
      EXPECT_EQ(contains(a, b), by_basis) << a.name() << " vs " << b.name();
    }
  }
}

TEST(VarietyProperty, DegreeMatchesWitnessCriterion) {
  for (const auto& v : registry_sample(8)) {
    if (!flags(v).is_nil) continue;
    auto d = degree(v);
    auto w = degree_by_witness(v, 12);
    if (d && *d <= 12)
      EXPECT_EQ(w, d) << v.name();
    else
      EXPECT_EQ(w, std::nullopt) << v.name();
  }
}

TEST(VarietyProperty, RegisteredMeetIsTheGreatestLowerBound) {
  auto reg = registry_sample(6);
  for (const auto& a : reg)
    for (const auto& b : reg) {
      auto m = registered_meet(a, b);
      if (!m) continue;
      EXPECT_TRUE(contains(a, *m) && contains(b, *m));
      EXPECT_EQ(registered_meet(b, a), m);
    }
}

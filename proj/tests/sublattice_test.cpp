#include <gtest/gtest.h>

#include "epilat/enumerate.hpp"
#include "epilat/lattice.hpp"
#include "epilat/sublattice.hpp"

using namespace epilat;

namespace {

std::vector<VarietyId> seeds(std::initializer_list<const char*> names) {
  std::vector<VarietyId> out;
  for (const char* n : names) out.push_back(parse_variety(n));
  return out;
}

} // namespace

TEST(LI, SmallCase) {
  auto l = build_LI(4);
  // L(1..4), K(3), K(4), J(4), I(4) and the four limits.
  EXPECT_EQ(l.size(), 12);
  auto covers = l.covers();
  auto cov = [&](const char* a, const char* b) {
    return std::find(covers.begin(), covers.end(), std::pair{*l.find(a), *l.find(b)}) != covers.end();
  };
  EXPECT_TRUE(cov("L(1)", "L(2)"));
  EXPECT_TRUE(cov("L(2)", "L(3)"));
  EXPECT_TRUE(cov("L(3)", "L(4)"));
  EXPECT_TRUE(cov("L(3)", "K(3)"));
  EXPECT_TRUE(cov("K(4)", "J(4)"));
  EXPECT_TRUE(cov("J(4)", "I(4)"));
  EXPECT_TRUE(l.leq(*l.find("K(3)"), *l.find("J(4)")));
  EXPECT_TRUE(isomorphic_labelled(l, expected_LI(4)));
}

TEST(LI, MatchesDescription) {
  for (int n = 4; n <= 8; ++n) {
    auto l = build_LI(n);
    EXPECT_TRUE(isomorphic_labelled(l, expected_LI(n))) << n;
    EXPECT_TRUE(lattice_props(l).distributive) << n;
  }
}

TEST(Sublattice, AtomsGiveTheSquare) {
  auto r = build_sublattice(seeds({"T", "SL", "ZM"}));
  ASSERT_EQ(r.lattice.size(), 4);
  EXPECT_TRUE(isomorphic_labelled(r.lattice, r.lattice));
  EXPECT_EQ(canonical_form(r.lattice), canonical_form(boolean_square()));
  for (const char* n : {"SL", "ZM"}) EXPECT_TRUE(special_profile(r.lattice, *r.lattice.find(n)).has(Special::Neutral));
}

TEST(Sublattice, WithKFamily) {
  auto r = build_sublattice(seeds({"T", "SL", "ZM", "K(3)", "K(4)"}));
  // ZM lies below K(3), so the joins collapse to eight nodes.
  EXPECT_EQ(r.lattice.size(), 8);
  for (const char* n : {"T", "SL", "ZM", "SL v ZM"}) {
    auto x = r.lattice.find(n);
    ASSERT_TRUE(x.has_value()) << n;
    EXPECT_TRUE(special_profile(r.lattice, *x).has(Special::Neutral)) << n;
  }
  EXPECT_FALSE(r.provenance.empty());
}

TEST(Sublattice, NeedsFactsForUnknownComparisons) {
  EXPECT_THROW(build_sublattice(seeds({"P", "Q", "LZ"})), Error);
}

TEST(Facts, Parse) {
  auto fs = parse_facts("# c\nZM <= K(3) + SL | atoms\nSL !<= Q + ZM | nil\n");
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_TRUE(fs[0].holds);
  EXPECT_EQ(fs[0].join.size(), 2u);
  EXPECT_FALSE(fs[1].holds);
  EXPECT_EQ(fs[1].citation, "nil");
  EXPECT_THROW(parse_facts("ZM <= K(3)\n"), Error);
}

TEST(Split, Lists) {
  EXPECT_EQ(split_variety_list("A + zr[x y; z] + K(3)", '+'), (std::vector<std::string>{"A", "zr[x y; z]", "K(3)"}));
  EXPECT_EQ(split_variety_list("T,SL ZM", ' '), (std::vector<std::string>{"T", "SL", "ZM"}));
}

#include <gtest/gtest.h>

#include "epilat/theorems.hpp"

using namespace epilat;

namespace {

TheoremStatus st(const char* v) { return theorem_status(parse_variety(v)); }

} // namespace

TEST(Status, NeutralAtoms) {
  for (const char* v : {"T", "SL", "ZM"}) {
    auto s = st(v);
    for (const auto& [name, p] : s.fields()) EXPECT_EQ(p->verdict, Verdict::Yes) << v << " " << name;
  }
  auto j = theorem_status(parse_variety("SL"), false, true);
  EXPECT_EQ(j.neutral.verdict, Verdict::Yes);
}

TEST(Status, DistributiveFamilies) {
  for (const char* v : {"Q", "R", "Q(3)", "R(4)"}) {
    auto s = st(v);
    EXPECT_EQ(s.distributive.verdict, Verdict::Yes) << v;
    EXPECT_EQ(s.standard.verdict, Verdict::Yes) << v;
    EXPECT_EQ(s.neutral.verdict, Verdict::No) << v;
  }
  EXPECT_EQ(st("K").distributive.verdict, Verdict::No);
}

TEST(Status, ModularityOfCommutativeNilVarieties) {
  auto cube = st("czr[x x x]");
  EXPECT_EQ(cube.modular.verdict, Verdict::No);
  EXPECT_EQ(cube.lower_modular.verdict, Verdict::No);
  EXPECT_EQ(st("K(4)").modular.verdict, Verdict::Yes);
  EXPECT_EQ(st("K").modular.verdict, Verdict::Yes);
  EXPECT_EQ(st("I").modular.verdict, Verdict::No);
}

TEST(Status, NotOfTheDecomposedForm) {
  for (const char* v : {"LZ", "P", "C(2)", "A(2)"}) {
    auto s = st(v);
    EXPECT_EQ(s.neutral.verdict, Verdict::No) << v;
    EXPECT_EQ(s.modular.verdict, Verdict::No) << v;
    EXPECT_FALSE(s.modular.reason.empty());
  }
}

TEST(Status, StronglyPermutativeCases) {
  EXPECT_EQ(st("A(3)").codistributive.verdict, Verdict::Yes);
  EXPECT_EQ(st("A(3)").upper_modular.verdict, Verdict::Yes);
  EXPECT_EQ(st("C(2)").upper_modular.verdict, Verdict::Yes);
  EXPECT_EQ(st("C(3)").upper_modular.verdict, Verdict::No);
  EXPECT_EQ(st("C(3)").codistributive.verdict, Verdict::No);
  EXPECT_EQ(st("K").upper_modular.verdict, Verdict::Yes);
}

TEST(Status, UncoveredStaysUncovered) {
  // Not commutative and not 0-reduced: outside every modularity criterion.
  auto s = st("P");
  EXPECT_EQ(s.codistributive.verdict, Verdict::NotCovered);
}

TEST(Helpers, StronglyPermutative) {
  EXPECT_TRUE(is_strongly_permutative(parse_variety("SL")));
  EXPECT_FALSE(is_strongly_permutative(parse_variety("Q")));
  EXPECT_TRUE(is_strongly_permutative(parse_variety("Q(3)")));
  EXPECT_FALSE(is_strongly_permutative(parse_variety("LZ")));
}

TEST(Helpers, ZeroReduced) {
  EXPECT_TRUE(is_zero_reduced_variety(parse_variety("Q")));
  EXPECT_TRUE(is_zero_reduced_variety(parse_variety("ZM")));
  EXPECT_FALSE(is_zero_reduced_variety(parse_variety("K")));
  EXPECT_THROW(is_zero_reduced_variety(parse_variety("SL")), Error);
}

// Every verdict must be consistent with the general lattice facts.
TEST(StatusProperty, ClosureUnderLatticeFacts) {
  for (const auto& v : registry_sample(6)) {
    auto s = theorem_status(v);
    auto y = [](const PropertyVerdict& p) { return p.verdict == Verdict::Yes; };
    auto n = [](const PropertyVerdict& p) { return p.verdict == Verdict::No; };
    if (y(s.neutral))
      for (const auto& [name, p] : s.fields()) EXPECT_TRUE(y(*p)) << v.name() << " " << name;
    if (y(s.standard)) EXPECT_FALSE(n(s.distributive) || n(s.modular)) << v.name();
    if (y(s.distributive)) EXPECT_FALSE(n(s.lower_modular)) << v.name();
    if (y(s.codistributive)) EXPECT_FALSE(n(s.upper_modular)) << v.name();
    if (y(s.distributive) && y(s.modular)) EXPECT_FALSE(n(s.standard)) << v.name();
    for (const auto& [name, p] : s.fields())
      if (p->verdict != Verdict::NotCovered) EXPECT_FALSE(p->reason.empty()) << v.name() << " " << name;
    auto sl = theorem_status(v, true, false);
    for (std::size_t i = 0; i < s.fields().size(); ++i)
      EXPECT_EQ(s.fields()[i].second->verdict, sl.fields()[i].second->verdict) << v.name();
  }
}

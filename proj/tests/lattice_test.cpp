#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "brute_lattices.hpp"
#include "epilat/enumerate.hpp"
#include "epilat/lattice.hpp"
#include "epilat/lattice_io.hpp"

using namespace epilat;

namespace {

FiniteLattice from_brute(const brute::Order& o) { return FiniteLattice::from_leq(o); }

FiniteLattice relabel(const FiniteLattice& l, const std::vector<int>& p) {
  const int n = l.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[p[i]] = l.label(i);
    for (int j = 0; j < n; ++j) le[p[i]][p[j]] = l.leq(i, j);
  }
  return FiniteLattice::from_leq(le, labels);
}

} // namespace

TEST(Construct, Examples) {
  auto c = chain(3);
  EXPECT_EQ(c.bottom(), 0);
  EXPECT_EQ(c.top(), 2);
  EXPECT_EQ(lattice_m3().size(), 5);
  try {
    FiniteLattice::from_covers(3, {{0, 1}, {0, 2}}, {"0", "a", "b"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("no lub(a, b)"), std::string::npos) << e.what();
  }
  EXPECT_THROW(FiniteLattice::from_covers(2, {{0, 1}, {1, 0}}), Error);
}

TEST(Profile, Examples) {
  auto c = chain(3);
  auto p = special_profile(c, 1);
  for (Special k : kAllSpecial) EXPECT_TRUE(p.has(k)) << to_string(k);

  auto n5 = lattice_n5();
  auto q = special_profile(n5, *n5.find("c"));
  EXPECT_FALSE(q.has(Special::Modular));
  EXPECT_EQ(q.witness(Special::Modular), std::pair(*n5.find("a"), *n5.find("b")));

  auto m3 = lattice_m3();
  auto r = special_profile(m3, *m3.find("a"));
  EXPECT_FALSE(r.has(Special::Neutral));
  EXPECT_TRUE(r.has(Special::Modular));
}

TEST(Props, Examples) {
  auto n5 = lattice_props(lattice_n5());
  EXPECT_FALSE(n5.modular);
  EXPECT_EQ(n5.witness_kind, "N5");
  auto m3 = lattice_props(lattice_m3());
  EXPECT_TRUE(m3.modular);
  EXPECT_FALSE(m3.distributive);
  EXPECT_EQ(m3.witness_kind, "M3");
  auto b = lattice_props(boolean_square());
  EXPECT_TRUE(b.modular && b.distributive);
}

TEST(Subdirect, Examples) {
  EXPECT_TRUE(neutral_subdirect_check(chain(3), 1).ok);
  EXPECT_TRUE(neutral_subdirect_check(boolean_square(), 1).ok);
  EXPECT_THROW(neutral_subdirect_check(lattice_m3(), 1), Error);
}

TEST(Enumerate, CountsMatchBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    auto mine = enumerate_lattices(n);
    auto theirs = brute::lattices(n);
    ASSERT_EQ(mine.size(), theirs.size()) << n;
    std::set<std::string> a, b;
    for (const auto& l : mine) a.insert(canonical_form(l));
    for (const auto& o : theirs) b.insert(canonical_form(from_brute(o)));
    EXPECT_EQ(a, b) << n;
    EXPECT_EQ(a.size(), mine.size()) << n;
  }
  EXPECT_EQ(enumerate_lattices(7).size(), 53u);
}

TEST(LatticeProperty, CanonicalFormIgnoresLabelling) {
  std::mt19937 rng(3);
  for (const auto& l : enumerate_lattices(6)) {
    std::vector<int> p(6);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    auto r = relabel(l, p);
    EXPECT_EQ(canonical_form(r), canonical_form(l));
    EXPECT_TRUE(isomorphic_labelled(r, l));
  }
}

// Naive definitions, quantified directly, against the library profile.
TEST(LatticeProperty, ProfileMatchesDefinitions) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : enumerate_lattices(n)) {
      const int m = l.size();
      auto J = [&](Node a, Node b) { return l.join(a, b); };
      auto M = [&](Node a, Node b) { return l.meet(a, b); };
      for (Node x = 0; x < m; ++x) {
        bool neutral = true, standard = true, costandard = true, distr = true, codistr = true, modular = true,
             lower = true, upper = true;
        for (Node y = 0; y < m; ++y)
          for (Node z = 0; z < m; ++z) {
            neutral &= J(J(M(x, y), M(y, z)), M(z, x)) == M(M(J(x, y), J(y, z)), J(z, x));
            standard &= M(J(x, y), z) == J(M(x, z), M(y, z));
            costandard &= J(M(x, y), z) == M(J(x, z), J(y, z));
            distr &= J(x, M(y, z)) == M(J(x, y), J(x, z));
            codistr &= M(x, J(y, z)) == J(M(x, y), M(x, z));
            if (l.leq(y, z)) modular &= J(y, M(x, z)) == M(J(y, x), z);
            if (l.leq(x, y)) lower &= J(x, M(y, z)) == M(y, J(x, z));
            if (l.leq(y, x)) upper &= M(x, J(y, z)) == J(y, M(x, z));
          }
        auto p = special_profile(l, x);
        EXPECT_EQ(p.has(Special::Neutral), neutral);
        EXPECT_EQ(p.has(Special::Standard), standard);
        EXPECT_EQ(p.has(Special::Costandard), costandard);
        EXPECT_EQ(p.has(Special::Distributive), distr);
        EXPECT_EQ(p.has(Special::Codistributive), codistr);
        EXPECT_EQ(p.has(Special::Modular), modular);
        EXPECT_EQ(p.has(Special::LowerModular), lower);
        EXPECT_EQ(p.has(Special::UpperModular), upper);
        for (Special k : kAllSpecial) EXPECT_EQ(p.has(k), !p.witness(k).has_value());
        if (neutral) EXPECT_TRUE(neutral_subdirect_check(l, x).ok);
      }
      bool distributive = true, modular_l = true;
      for (Node x = 0; x < m; ++x)
        for (Node y = 0; y < m; ++y)
          for (Node z = 0; z < m; ++z) {
            distributive &= J(x, M(y, z)) == M(J(x, y), J(x, z));
            if (l.leq(x, z)) modular_l &= J(x, M(y, z)) == M(J(x, y), z);
          }
      auto props = lattice_props(l);
      EXPECT_EQ(props.distributive, distributive);
      EXPECT_EQ(props.modular, modular_l);
    }
}

TEST(LatticeProperty, DualSwapsOperations) {
  for (const auto& l : enumerate_lattices(5)) {
    auto d = l.dual();
    for (Node a = 0; a < l.size(); ++a)
      for (Node b = 0; b < l.size(); ++b) {
        EXPECT_EQ(d.meet(a, b), l.join(a, b));
        EXPECT_EQ(d.leq(a, b), l.leq(b, a));
      }
    EXPECT_EQ(d.bottom(), l.top());
  }
}

TEST(LatticeIo, RoundTrip) {
  auto l = parse_lattice("# N5\nelements: 0 a b c 1\ncover: 0 < a\ncover: a < b\ncover: b < 1\ncover: 0 < c\n"
                         "cover: c < 1\nlabel: a = SL\n");
  EXPECT_EQ(l.size(), 5);
  EXPECT_TRUE(l.find("SL").has_value());
  auto again = parse_lattice(format_lattice(l));
  EXPECT_TRUE(isomorphic_labelled(l, again));
  auto dot = to_dot(l);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
  EXPECT_THROW(parse_lattice("elements: a b\ncover: a < q\n"), Error);
}

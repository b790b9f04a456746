#include <gtest/gtest.h>

#include <random>

#include "epilat/deduction.hpp"
#include "epilat/epigroup.hpp"
#include "epilat/suites.hpp"

using namespace epilat;

namespace {

Theory single(const char* name, std::initializer_list<const char*> ids) {
  Theory t;
  t.name = name;
  int i = 0;
  for (const char* s : ids) t.identities.push_back({std::string(name) + "#" + std::to_string(++i), parse_identity(s)});
  return t;
}

std::vector<Term> terms(std::initializer_list<const char*> ts) {
  std::vector<Term> out;
  for (const char* t : ts) out.push_back(parse_term(t));
  return out;
}

} // namespace

TEST(OneStep, Examples) {
  Theory p = single("P", {"x y = x x y"});
  auto s = one_step(parse_term("x y"), parse_term("x x y"), p);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->used.lhs, parse_term("x y"));
  EXPECT_TRUE(one_step(parse_term("x x y"), parse_term("x x x y"), p).has_value());
  EXPECT_FALSE(one_step(parse_term("x y"), parse_term("y x"), p).has_value());
  // Inside a pseudo-inverse.
  auto in = one_step(parse_term("z ~(x y)"), parse_term("z ~(x x y)"), p);
  ASSERT_TRUE(in.has_value());
  EXPECT_EQ(in->context.path.size(), 1u);
}

TEST(Verify, Examples) {
  Theory p = single("P", {"x y = x x y"});
  auto ok = verify_deduction(terms({"x y", "x x y", "x x x y"}), {p});
  EXPECT_TRUE(ok.ok);
  EXPECT_EQ(ok.steps.size(), 2u);
  auto bad = verify_deduction(terms({"x y", "y x"}), {p});
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.failed_at, 0u);
  Theory cr = single("CR", {"x = ~(~(x))"});
  EXPECT_TRUE(verify_deduction(terms({"x x", "~(~(x)) x", "~(~(x)) ~(~(x))"}), {cr}).ok);
}

TEST(Verify, ReplaysAreAccepted) {
  for (const auto& r : displayed_deductions()) {
    std::vector<Term> seq;
    for (const auto& t : r.terms) seq.push_back(parse_term(t));
    auto rep = verify_deduction(seq, replay_theories(r));
    EXPECT_TRUE(rep.ok) << r.name << ": " << rep.message;
  }
}

TEST(Search, Examples) {
  Theory comm = single("comm", {"x y = y x"});
  auto r = search_deduction(parse_term("x y"), parse_term("y x"), comm, 1);
  EXPECT_EQ(r.status, SearchStatus::Found);
  EXPECT_EQ(r.sequence.size(), 2u);
  auto k = search_zero(parse_term("x x x"), theory_of(parse_variety("K")), 2);
  EXPECT_EQ(k.status, SearchStatus::Found);
  auto q = search_zero(parse_term("x x"), theory_of(parse_variety("Q"), true));
  EXPECT_EQ(q.status, SearchStatus::NotFound);
  auto p = search_deduction(parse_term("x y"), parse_term("y x"), single("P", {"x y = x x y"}), 2, 6);
  EXPECT_NE(p.status, SearchStatus::Found);
}

TEST(File, Parse) {
  auto f = parse_deduction_file("# K collapse\ntheory: K\nx x x\nx x x z\n");
  ASSERT_EQ(f.theories.size(), 1u);
  EXPECT_EQ(f.terms.size(), 2u);
  EXPECT_TRUE(verify_deduction(f.terms, f.theories).ok);
  auto g = parse_deduction_file("theory: epi\naxiom cr: x = ~(~(x))\nx\n~(~(x))\n");
  EXPECT_TRUE(verify_deduction(g.terms, g.theories).ok);
  EXPECT_THROW(parse_deduction_file("theory: Nope\nx\n"), Error);
}

// Every accepted step is sound: it holds in each finite model of the theory.
TEST(DeductionProperty, FoundDerivationsAreSound) {
  std::mt19937 rng(5);
  std::vector<Theory> ths = {theory_of(parse_variety("P")), theory_of(parse_variety("K")),
                             theory_of(parse_variety("C(2)"), true)};
  auto models = builtin_catalog();
  for (const auto& th : ths) {
    auto start = parse_term(rng() % 2 ? "x y" : "x x y");
    auto r = search_zero(start, th, 3, 8);
    if (r.status == SearchStatus::Found) {
      EXPECT_TRUE(verify_deduction(r.sequence, {th}).ok) << th.name;
    }
    for (const auto& rule : th.rules())
      for (const auto& [name, s] : models) {
        bool model = true;
        for (const auto& r2 : th.rules()) model = model && satisfies(s, r2.identity);
        if (model) EXPECT_TRUE(satisfies(s, rule.identity)) << th.name << " " << name;
      }
  }
}

TEST(DeductionProperty, StepsOfRandomRewritesVerify) {
  Theory th = theory_of(parse_variety("K(4)"), true);
  auto rules = th.rules();
  std::mt19937 rng(19);
  const std::vector<Term> seeds = terms({"x y", "x ~(y) x", "~(x y) z", "x x"});
  for (int i = 0; i < 100; ++i) {
    Term w = seeds[rng() % seeds.size()];
    const auto& rule = rules[rng() % rules.size()];
    // Instantiate the left side with letters and prepend it, so the step is an
    // application at the front of the word.
    Substitution s;
    for (const auto& l : content(rule.identity.lhs)) s.emplace(l, Term::letter(rng() % 2 ? "x" : "y"));
    for (const auto& l : content(*rule.identity.rhs)) s.emplace(l, Term::letter("y"));
    Term a = Term::product(substitute(rule.identity.lhs, s), w);
    Term b = Term::product(substitute(*rule.identity.rhs, s), w);
    if (a == b) continue;
    EXPECT_TRUE(one_step(a, b, th).has_value()) << a.str() << " -> " << b.str();
    EXPECT_TRUE(one_step(b, a, th).has_value()) << b.str() << " -> " << a.str();
  }
}

#include "epilat/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "epilat/enumerate.hpp"
#include "epilat/epigroup.hpp"
#include "epilat/formula.hpp"
#include "epilat/lattice.hpp"
#include "epilat/sublattice.hpp"
#include "epilat/theorems.hpp"

namespace epilat {

std::string SuiteReport::str() const {
  std::string out = "suite\t" + name + "\n";
  out += "checks\t" + std::to_string(checks) + "\n";
  out += "failures\t" + std::to_string(failures.size()) + "\n";
  for (const auto& [k, v] : metrics) out += "metric\t" + k + "\t" + v + "\n";
  for (const auto& f : failures) out += "failure\t" + f + "\n";
  out += std::string("status\t") + (ok() ? "pass" : "fail") + "\n";
  return out;
}

namespace {

struct Ctx {
  SuiteReport& r;
  void check(bool ok, const std::function<std::string()>& what) {
    ++r.checks;
    if (!ok && r.failures.size() < 50) r.failures.push_back(what());
  }
  // One check whose failures are the listed witnesses.
  void check_all(const std::vector<std::string>& witnesses) {
    ++r.checks;
    for (const auto& w : witnesses)
      if (r.failures.size() < 50) r.failures.push_back(w);
  }
  void metric(std::string k, std::string v) { r.metrics.emplace_back(std::move(k), std::move(v)); }
};

std::string deg_str(std::optional<int> d) { return d ? std::to_string(*d) : "inf"; }

// ---------------------------------------------------------------- lattices

void lattice_lemmas(Ctx& c, const SuiteParams& p) {
  static const int known[] = {0, 1, 1, 1, 2, 5, 15, 53};
  int total = 0;
  for (int n = 1; n <= p.lattice_max; ++n) {
    auto ls = enumerate_lattices(n);
    total += static_cast<int>(ls.size());
    c.metric("lattices_" + std::to_string(n), std::to_string(ls.size()));
    c.check(static_cast<int>(ls.size()) == known[n], [&] { return "lattice count for n=" + std::to_string(n); });
    for (const auto& l : ls) {
      const std::string lname = "lattice " + canonical_form(l);
      std::vector<SpecialProfile> prof;
      for (Node x = 0; x < l.size(); ++x) prof.push_back(special_profile(l, x));
      bool all_neutral = true;
      for (Node x = 0; x < l.size(); ++x) {
        const auto& s = prof[x];
        auto h = [&](Special k) { return s.has(k); };
        auto at = [&](const char* what) { return [=] { return lname + " element " + std::to_string(x) + ": " + what; }; };
        all_neutral = all_neutral && h(Special::Neutral);
        c.check(!h(Special::Neutral) || (h(Special::Standard) && h(Special::Costandard)), at("neutral => standard, costandard"));
        c.check(!h(Special::Standard) || (h(Special::Distributive) && h(Special::Modular)), at("standard => distributive, modular"));
        c.check(!h(Special::Costandard) || (h(Special::Codistributive) && h(Special::Modular)),
                at("costandard => codistributive, modular"));
        c.check(!h(Special::Distributive) || h(Special::LowerModular), at("distributive => lower-modular"));
        c.check(!h(Special::Codistributive) || h(Special::UpperModular), at("codistributive => upper-modular"));
        c.check(!(h(Special::Distributive) && h(Special::Modular)) || h(Special::Standard),
                at("distributive and modular => standard"));
        c.check(h(Special::Neutral) == (h(Special::Distributive) && h(Special::Codistributive) && h(Special::Modular)),
                at("neutral <=> distributive, codistributive and modular"));
      }
      c.check(lattice_props(l).distributive == all_neutral, [&] { return lname + ": distributive <=> all neutral"; });
      // Joining with a neutral atom preserves and reflects every type.
      for (Node a = 0; a < l.size(); ++a) {
        bool atom = a != l.bottom();
        for (Node y = 0; y < l.size() && atom; ++y)
          if (y != l.bottom() && y != a && l.leq(y, a)) atom = false;
        if (!atom || !prof[a].has(Special::Neutral)) continue;
        for (Node x = 0; x < l.size(); ++x)
          for (Special k : kAllSpecial)
            c.check(prof[x].has(k) == prof[l.join(x, a)].has(k), [&] {
              return lname + ": neutral atom " + std::to_string(a) + ", element " + std::to_string(x) + ", " + to_string(k);
            });
      }
    }
  }
  c.metric("lattices_total", std::to_string(total));
}

void fo_crossval(Ctx& c, const SuiteParams& p) {
  std::vector<std::pair<Special, Formula>> fs;
  for (Special k : kAllSpecial) fs.emplace_back(k, parse_formula(definitional_formula(k)));
  for (int n = 1; n <= p.lattice_max; ++n)
    for (const auto& l : enumerate_lattices(n)) {
      std::vector<SpecialProfile> prof;
      for (Node x = 0; x < l.size(); ++x) prof.push_back(special_profile(l, x));
      for (const auto& [k, f] : fs) {
        std::set<Node> expect;
        for (Node x = 0; x < l.size(); ++x)
          if (prof[x].has(k)) expect.insert(x);
        c.check(defined_set(l, f) == expect, [&] { return "lattice " + canonical_form(l) + ": " + to_string(k); });
      }
    }
}

// ---------------------------------------------------------------- varieties

void word_problems(Ctx& c, const SuiteParams& p) {
  std::vector<std::string> two_sided = {"SL", "C(2)", "ZM", "A(1)", "A(2)", "A(3)", "A(4)",
                                        "T",  "LZ",   "RZ", "C(0)", "C(1)", "C(3)"};
  for (const auto& n : two_sided) {
    auto r = oracle_check(parse_variety(n), p.bounds);
    c.metric("oracle_terms", std::to_string(r.terms));
    c.check(r.two_sided, [&] { return n + ": no generator"; });
    c.check_all(r.mismatches);
  }
  OracleBounds one = p.bounds;
  one.max_occurrences = std::min(one.max_occurrences, 4);
  for (const auto& n : {"P", "Pbar", "LZM", "RZM", "Q", "R", "Q(3)", "R(3)", "K(4)", "I", "J", "L(3)", "zr[x y z]",
                        "czr[x x x]", "A(0)"}) {
    auto r = oracle_check(parse_variety(n), one);
    c.metric(std::string("models_") + n, std::to_string(r.models));
    c.check_all(r.mismatches);
  }

  // Closure under substitution, sampled.
  std::mt19937_64 rng(p.seed);
  auto terms = enumerate_terms(3, 3, 1);
  auto small = enumerate_terms(2, 3, 1);
  for (const auto& v : registry_sample(5)) {
    std::map<std::string, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < terms.size(); ++i) classes[normal_key(v, terms[i])].push_back(i);
    int sampled = 0;
    for (const auto& [key, idx] : classes) {
      if (idx.size() < 2 || sampled >= 40) continue;
      ++sampled;
      const Term& u = terms[idx[rng() % idx.size()]];
      const Term& w = terms[idx[rng() % idx.size()]];
      Substitution s;
      for (const char* l : {"x", "y", "z"}) s.emplace(l, small[rng() % small.size()]);
      Identity inst{substitute(u, s), substitute(w, s)};
      c.check(decide(v, inst), [&] { return v.name() + ": substitution instance fails: " + inst.str(); });
    }
    // Splitting: in a nontrivial nil variety, equal terms with different
    // contents are zero.
    if (flags(v).is_nil && classes.size() > 1) {
      for (const auto& [key, idx] : classes) {
        std::set<std::set<Symbol>> contents;
        for (auto i : idx) contents.insert(content(terms[i]));
        if (contents.size() > 1)
          c.check(key == "0", [&, key = key] { return v.name() + ": class " + key + " mixes contents but is not zero"; });
      }
    }
  }
}

void q_ideal(Ctx& c, const SuiteParams& p) {
  const VarietyId q = make_variety(Family::Q);
  const VarietyId zr = make_zero_reduced({parse_term("x x y"), parse_term("x y x"), parse_term("y x x")});
  std::size_t words = 0;
  for (const auto& w : enumerate_terms(p.q_length, 3, 1)) {
    bool semigroup = w.is_semigroup_word();
    if (!semigroup && w.inverse_depth() != 1) continue;
    ++words;
    auto st = term_stats(w);
    bool square = semigroup && w.factor_count() == 2 && w.factors()[0] == w.factors()[1];
    bool expect_zero = !semigroup || (!st.is_linear && !square);
    bool zero = !normal_form(q, w).has_value();
    c.check(zero == expect_zero, [&] { return "Q: " + w.str() + (zero ? " is zero" : " is not zero"); });
    c.check(zero == (normal_key(zr, w) == "0"), [&] { return "Q and its 0-reduced basis disagree on " + w.str(); });
  }
  c.metric("words", std::to_string(words));
}

void figure2(Ctx& c, const SuiteParams& p) {
  const int n = p.n_max;
  auto li = build_LI(n);
  auto ex = expected_LI(n);
  c.metric("nodes", std::to_string(li.size()));
  c.check(isomorphic_labelled(li, ex), [] { return "build_LI differs from the four-column description"; });
  auto props = lattice_props(li);
  c.check(props.distributive, [&] { return "not distributive: " + props.witness_kind; });
  auto node = [&](const std::string& s) { return *li.find(s); };
  auto covers = li.covers();
  auto is_cover = [&](const std::string& a, const std::string& b) {
    return std::find(covers.begin(), covers.end(), std::pair{node(a), node(b)}) != covers.end();
  };
  const char* cols[] = {"L", "K", "J", "I"};
  const int col_min[] = {1, 3, 4, 4};
  for (int col = 0; col < 4; ++col) {
    std::string base = cols[col];
    for (int k = col_min[col]; k < n; ++k) {
      std::string a = base + "(" + std::to_string(k) + ")", b = base + "(" + std::to_string(k + 1) + ")";
      c.check(is_cover(a, b), [=] { return "missing cover " + a + " < " + b; });
    }
    std::string top = base + "(" + std::to_string(n) + ")";
    c.check(is_cover(top, base), [=] { return "missing cover " + top + " < " + base; });
    if (col > 0) {
      c.check(is_cover(cols[col - 1], base), [=] { return std::string("missing cover ") + cols[col - 1] + " < " + base; });
      for (int k = col_min[col]; k <= n; ++k) {
        std::string a = std::string(cols[col - 1]) + "(" + std::to_string(k) + ")", b = base + "(" + std::to_string(k) + ")";
        c.check(is_cover(a, b), [=] { return "missing cover " + a + " < " + b; });
      }
    }
  }
  c.check(li.label(li.bottom()) == "L(1)", [] { return "bottom is not L(1) = T"; });
  c.check(contains(make_variety(Family::T), make_variety(Family::Ln, 1)) &&
              contains(make_variety(Family::Ln, 1), make_variety(Family::T)),
          [] { return "L(1) is not T"; });
  c.check(contains(make_variety(Family::ZM), make_variety(Family::Ln, 2)) &&
              contains(make_variety(Family::Ln, 2), make_variety(Family::ZM)),
          [] { return "L(2) is not ZM"; });
  std::vector<std::optional<int>> deg(li.size());
  for (Node a = 0; a < li.size(); ++a) {
    VarietyId v = parse_variety(li.label(a));
    deg[a] = degree(v);
    auto lab = li.label(a);
    std::optional<int> want;
    if (auto open = lab.find('('); open != std::string::npos) want = std::stoi(lab.substr(open + 1));
    c.check(deg[a] == want, [&] { return "degree of " + lab + " is " + deg_str(deg[a]); });
    c.check(decide(v, parse_identity("x y = y x")) && decide(v, parse_identity("x x y = x y y")),
            [&] { return lab + " fails xy = yx or x^2 y = x y^2"; });
  }
  auto mx = [](std::optional<int> a, std::optional<int> b) -> std::optional<int> {
    if (!a || !b) return std::nullopt;
    return std::max(*a, *b);
  };
  auto mn = [](std::optional<int> a, std::optional<int> b) -> std::optional<int> {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
  };
  for (Node a = 0; a < li.size(); ++a)
    for (Node b = 0; b < li.size(); ++b) {
      c.check(deg[li.join(a, b)] == mx(deg[a], deg[b]),
              [&] { return "degree of join " + li.label(a) + " v " + li.label(b); });
      c.check(deg[li.meet(a, b)] == mn(deg[a], deg[b]),
              [&] { return "degree of meet " + li.label(a) + " ^ " + li.label(b); });
    }
  if (n > 4) {
    auto smaller = build_LI(n - 1);
    for (Node a = 0; a < smaller.size(); ++a)
      for (Node b = 0; b < smaller.size(); ++b) {
        Node fa = node(smaller.label(a)), fb = node(smaller.label(b));
        bool same = smaller.leq(a, b) == li.leq(fa, fb) &&
                    smaller.label(smaller.join(a, b)) == li.label(li.join(fa, fb)) &&
                    smaller.label(smaller.meet(a, b)) == li.label(li.meet(fa, fb));
        c.check(same, [&] { return "build_LI(n-1) is not a sublattice at " + smaller.label(a) + ", " + smaller.label(b); });
      }
  }
}

void degree_calculus(Ctx& c, const SuiteParams& p) {
  auto reg = registry_sample(p.n_max);
  std::size_t pairs = 0;
  for (const auto& a : reg)
    for (const auto& b : reg) {
      auto m = registered_meet(a, b);
      if (!m) continue;
      ++pairs;
      c.check(contains(a, *m) && contains(b, *m), [&] { return "meet of " + a.name() + ", " + b.name() + " too big"; });
      for (const auto& z : reg)
        if (contains(a, z) && contains(b, z))
          c.check(contains(*m, z), [&] { return z.name() + " below " + a.name() + ", " + b.name() + " but not the meet"; });
      auto da = degree(a), db = degree(b), dm = degree(*m);
      std::optional<int> want = !da ? db : !db ? da : std::optional<int>(std::min(*da, *db));
      c.check(dm == want, [&] { return "deg(" + a.name() + " ^ " + b.name() + ") = " + deg_str(dm); });
    }
  c.metric("meet_pairs", std::to_string(pairs));
  for (const auto& v : reg) {
    if (!flags(v).is_nil) continue;
    auto d = degree(v);
    for (int n = 1; n <= p.n_max; ++n) {
      bool by_degree = d && *d <= n;
      bool by_w = !contains(v, make_variety(Family::W, n));
      bool by_witness = false;
      for (const auto& w : degree_witnesses(n)) by_witness = by_witness || decide(v, w);
      c.check(by_degree == by_w && by_w == by_witness,
              [&] { return v.name() + ": degree criteria disagree at n=" + std::to_string(n); });
    }
  }
  for (const char* name : {"P", "Pbar"}) {
    auto d = degree(parse_variety(name));
    c.metric(std::string("deg_") + name, deg_str(d));
    c.check(d == 2, [&] { return std::string("deg(") + name + ") = " + deg_str(d); });
  }
}

// ---------------------------------------------------------------- epigroups

void epigroup_lemmas(Ctx& c, const SuiteParams&) {
  auto cat = builtin_catalog();
  std::vector<std::pair<std::string, FiniteEpigroup>> all = cat;
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i; j < cat.size(); ++j)
      if (cat[i].second.order() * cat[j].second.order() <= 12)
        all.emplace_back(cat[i].first + "x" + cat[j].first, direct_product(cat[i].second, cat[j].second));
  c.metric("epigroups", std::to_string(all.size()));
  const Identity x_dd = parse_identity("x = ~(~(x))"), inv_zero = parse_identity("~(x) = 0"),
                 inv_sq = parse_identity("~(x) = x ~(x) ~(x)");
  for (const auto& [name, s] : all) {
    const int n = s.order();
    bool all_group = true, nil = s.zero().has_value();
    for (Element x = 0; x < n; ++x) {
      all_group = all_group && s.mul(x, s.omega(x)) == x;
      nil = nil && s.omega(x) == *s.zero();
      c.check(s.mul(s.omega(x), s.omega(x)) == s.omega(x), [&] { return name + ": omega not idempotent"; });
      c.check(s.mul(x, s.pinv(x)) == s.omega(x) && s.mul(s.pinv(x), x) == s.omega(x),
              [&] { return name + ": x ~x != x^w"; });
    }
    c.check(satisfies(s, x_dd) == all_group, [&] { return name + ": x = ~~x vs completely regular"; });
    c.check(satisfies(s, inv_zero) == nil, [&] { return name + ": ~x = 0 vs nil"; });
    c.check(satisfies(s, inv_sq), [&] { return name + ": ~x = x ~x ~x fails"; });
    auto prof = classify_epigroup(s);
    bool comb = true;
    for (Element g : prof.group_elements) comb = comb && s.mul(g, g) == g;
    c.check(prof.is_combinatorial == comb, [&] { return name + ": combinatorial test"; });
    c.check(!prof.is_group || prof.is_completely_regular, [&] { return name + ": group but not CR"; });
    c.check(!prof.is_semilattice || (prof.is_completely_regular && prof.is_combinatorial),
            [&] { return name + ": semilattice but not CR and combinatorial"; });
    c.check(!(prof.is_nil && prof.is_completely_regular) || n == 1, [&] { return name + ": nil and CR"; });
    for (int m = 1; m <= 6; ++m) {
      Term xm = Term::power(Term::letter("x"), m);
      if (!satisfies(s, Identity{xm, Term::power(Term::letter("x"), m + 1)})) continue;
      bool ok = satisfies(s, parse_identity("x^w = ~(x)")) && satisfies(s, parse_identity("~(x) = ~(~(x))")) &&
                satisfies(s, Identity{parse_term("~(~(x))"), xm});
      c.check(ok, [&] { return name + ": x^m = x^(m+1) without x^w = ~x = ~~x = x^m, m=" + std::to_string(m); });
    }
  }
}

// ---------------------------------------------------------------- theorems

void theorem_necessary(Ctx& c, const SuiteParams& p) {
  auto neutral_names = [&](const FiniteLattice& l, std::vector<std::string> names, const std::string& what) {
    for (const auto& nm : names) {
      auto x = l.find(nm);
      c.check(x.has_value(), [&] { return what + ": no node " + nm; });
      if (x) c.check(special_profile(l, *x).has(Special::Neutral), [&] { return what + ": " + nm + " not neutral"; });
    }
  };
  auto s1 = build_sublattice({parse_variety("T"), parse_variety("SL"), parse_variety("ZM")});
  c.metric("sublattice1_nodes", std::to_string(s1.lattice.size()));
  c.check(s1.lattice.size() == 4 && lattice_props(s1.lattice).distributive, [] { return "{T, SL, ZM} is not 2x2"; });
  neutral_names(s1.lattice, {"T", "SL", "ZM", "SL v ZM"}, "{T, SL, ZM}");
  std::vector<VarietyId> seeds = {parse_variety("T"), parse_variety("SL"), parse_variety("ZM"), parse_variety("K(3)"),
                                  parse_variety("K(4)")};
  auto s2 = build_sublattice(seeds);
  c.metric("sublattice2_nodes", std::to_string(s2.lattice.size()));
  neutral_names(s2.lattice, {"T", "SL", "ZM", "SL v ZM"}, "{T, SL, ZM, K(3), K(4)}");
  // Where the true meet is known and is itself a node, the poset meet must be it.
  for (Node a = 0; a < s2.lattice.size(); ++a)
    for (Node b = 0; b < s2.lattice.size(); ++b) {
      if (s2.members[a].size() != 1 || s2.members[b].size() != 1) continue;
      const auto &va = s2.members[a][0], &vb = s2.members[b][0];
      std::optional<std::string> want;
      if (contains(va, vb)) {
        want = s2.lattice.label(b);
      } else if (contains(vb, va)) {
        want = s2.lattice.label(a);
      } else if (auto m = registered_meet(va, vb); m && s2.lattice.find(m->name())) {
        want = m->name();
      } else {
        // Every nontrivial variety contains SL or ZM, so without a common atom the meet is T.
        bool share = (contains_atom(va, Atom::SL) && contains_atom(vb, Atom::SL)) ||
                     (contains_atom(va, Atom::ZM) && contains_atom(vb, Atom::ZM));
        if (!share) want = "T";
      }
      if (want)
        c.check(s2.lattice.label(s2.lattice.meet(a, b)) == *want,
                [&] { return "meet of " + va.name() + " and " + vb.name() + " in the sublattice"; });
    }
  auto li = build_LI(p.n_max);
  for (Node x = 0; x < li.size(); ++x) {
    auto prof = special_profile(li, x);
    c.check(prof.has(Special::Modular) && prof.has(Special::Neutral),
            [&] { return "build_LI: " + li.label(x) + " not modular/neutral"; });
  }
  // Neutral verdicts only for the atoms and T; every variety reported as not
  // of the form M v N is told apart from that form by a separating identity.
  const std::vector<VarietyId> atoms = {make_variety(Family::T), make_variety(Family::SL), make_variety(Family::ZM)};
  auto same = [](const VarietyId& a, const VarietyId& b) { return contains(a, b) && contains(b, a); };
  for (const auto& v : registry_sample(5)) {
    if (theorem_status(v).neutral.verdict == Verdict::Yes)
      c.check(std::any_of(atoms.begin(), atoms.end(), [&](const VarietyId& a) { return same(a, v); }),
              [&] { return v.name() + " reported neutral"; });
    if (!decompose(v)) {
      auto seps = decomposition_separators();
      c.check(std::any_of(seps.begin(), seps.end(), [&](const Identity& i) { return !decide(v, i); }),
              [&] { return v.name() + ": no separator shows it is not M v N"; });
    }
  }
}

// ---------------------------------------------------------------- deduction

void deduction_replay(Ctx& c, const SuiteParams& p) {
  auto models = builtin_catalog();
  for (const auto& r : displayed_deductions()) {
    std::vector<Term> seq;
    for (const auto& t : r.terms) seq.push_back(parse_term(t));
    auto ths = replay_theories(r);
    auto rep = verify_deduction(seq, ths);
    c.check(rep.ok, [&] { return r.name + ": " + rep.message; });
    std::reverse(seq.begin(), seq.end());
    c.check(verify_deduction(seq, ths).ok, [&] { return r.name + ": reversed sequence rejected"; });
    // Soundness on every builtin model of the theories.
    for (const auto& [name, s] : models) {
      bool model = true;
      for (const auto& th : ths)
        for (const auto& t : th.rules()) model = model && satisfies(s, t.identity);
      if (model)
        c.check(satisfies(s, Identity{seq.front(), seq.back()}), [&] { return r.name + ": unsound on " + name; });
    }
  }
  auto q = theory_of(make_variety(Family::Q), true);
  auto res = search_zero(parse_term("x x"), q, p.depth, p.size_cap);
  c.metric("q_square_search", to_string(res.status));
  c.check(res.status == SearchStatus::NotFound, [&] { return "x x = 0 from Q: " + to_string(res.status); });
  auto k = theory_of(make_variety(Family::K));
  auto kres = search_zero(parse_term("x x x"), k, p.depth, p.size_cap);
  c.check(kres.status == SearchStatus::Found && verify_deduction(kres.sequence, {k}).ok,
          [&] { return "x x x = 0 from K: " + to_string(kres.status); });
}

} // namespace

std::vector<Replay> displayed_deductions() {
  return {
      {"square-double-inverse", {"axiom: x = ~(~(x))"}, {"x x", "~(~(x)) x", "~(~(x)) ~(~(x))"}},
      {"K-collapse", {"K"}, {"x x x", "x x x z"}},
      {"C2-reduction",
       {"C(2)", "epi", "axiom: x x = x x x ~(x)"},
       {"~(x)", "x ~(x) ~(x)", "x x ~(x) ~(x) ~(x)", "x x x ~(x) ~(x) ~(x)", "x x ~(x) ~(x)", "x x x ~(x) ~(x)",
        "x x ~(x)", "x x x ~(x)", "x x"}},
  };
}

std::vector<Theory> replay_theories(const Replay& r) {
  std::vector<Theory> out;
  Theory ax;
  ax.name = "axioms";
  for (const auto& t : r.theories) {
    if (t == "epi") {
      Theory e;
      e.name = "epi";
      e.includes_epi_axioms = true;
      out.push_back(e);
    } else if (t.rfind("axiom:", 0) == 0) {
      ax.identities.push_back({"axiom" + std::to_string(ax.identities.size() + 1), parse_identity(t.substr(6))});
    } else {
      out.push_back(theory_of(parse_variety(t)));
    }
  }
  if (!ax.identities.empty()) out.push_back(ax);
  return out;
}

std::vector<std::string> suite_names() {
  return {"lattice-lemmas", "word-problems",   "figure2",     "epigroup-lemmas",
          "degree-calculus", "theorem-necessary-conditions", "q-ideal", "deduction-replay", "fo-crossval"};
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  static const std::map<std::string, void (*)(Ctx&, const SuiteParams&)> table = {
      {"lattice-lemmas", lattice_lemmas},
      {"word-problems", word_problems},
      {"figure2", figure2},
      {"epigroup-lemmas", epigroup_lemmas},
      {"degree-calculus", degree_calculus},
      {"theorem-necessary-conditions", theorem_necessary},
      {"q-ideal", q_ideal},
      {"deduction-replay", deduction_replay},
      {"fo-crossval", fo_crossval},
  };
  auto it = table.find(name);
  if (it == table.end()) throw Error("unknown suite '" + name + "'");
  SuiteReport r;
  r.name = name;
  Ctx c{r};
  auto t0 = std::chrono::steady_clock::now();
  it->second(c, params);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

} // namespace epilat

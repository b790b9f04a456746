// epilat command line front end.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "epilat/deduction.hpp"
#include "epilat/epigroup.hpp"
#include "epilat/formula.hpp"
#include "epilat/lattice.hpp"
#include "epilat/lattice_io.hpp"
#include "epilat/sublattice.hpp"
#include "epilat/suites.hpp"
#include "epilat/theorems.hpp"
#include "epilat/variety.hpp"

using namespace epilat;

namespace {

constexpr int kOk = 0, kCheckFailed = 1, kUsage = 2;

std::string pair_str(const FiniteLattice& l, const std::optional<std::pair<Node, Node>>& w) {
  if (!w) return "";
  return " witness (" + l.label(w->first) + "," + l.label(w->second) + ")";
}

Node element(const FiniteLattice& l, const std::string& name) {
  auto x = l.find(name);
  if (!x) throw Error("no element '" + name + "' in the lattice");
  return *x;
}

int cmd_check(const std::string& variety, const std::string& identity) {
  VarietyId v = parse_variety(variety);
  Identity id = parse_identity(identity);
  bool ok = decide(v, id);
  std::cout << (ok ? "holds" : "fails") << "\t" << v.name() << "\t" << id.str() << "\t(" << criterion(v) << ")\n";
  return ok ? kOk : kCheckFailed;
}

int cmd_status(const std::string& variety, bool sl, bool zm) {
  auto st = theorem_status(parse_variety(variety), sl, zm);
  std::cout << "variety\t" << st.variety << "\n";
  for (const auto& [name, p] : st.fields()) std::cout << name << "\t" << to_string(p->verdict) << "\t" << p->reason << "\n";
  return kOk;
}

int cmd_lattice_profile(const FiniteLattice& l, const std::vector<std::string>& elems) {
  std::vector<Node> xs;
  for (const auto& e : elems) xs.push_back(element(l, e));
  if (xs.empty())
    for (Node x = 0; x < l.size(); ++x) xs.push_back(x);
  for (Node x : xs) {
    auto p = special_profile(l, x);
    std::cout << l.label(x) << ":";
    for (Special k : kAllSpecial) std::cout << " " << to_string(k) << ":" << (p.has(k) ? "true" : "false");
    std::cout << "\n";
    for (Special k : kAllSpecial)
      if (!p.has(k)) std::cout << "  " << to_string(k) << ":false" << pair_str(l, p.witness(k)) << "\n";
  }
  return kOk;
}

int cmd_lattice_props(const FiniteLattice& l) {
  auto p = lattice_props(l);
  std::cout << "modular:" << (p.modular ? "true" : "false") << " distributive:" << (p.distributive ? "true" : "false");
  if (p.witness) {
    std::cout << " witness " << p.witness_kind << " (";
    for (int i = 0; i < 5; ++i) std::cout << (i ? "," : "") << l.label((*p.witness)[i]);
    std::cout << ")";
  }
  std::cout << "\n";
  return kOk;
}

int cmd_lattice_fo(const FiniteLattice& l, const std::string& formula_file, const std::string& var,
                   const std::vector<std::string>& binds) {
  Formula f = parse_formula(read_file(formula_file));
  Binding b;
  for (const auto& s : binds) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw Error("binding must look like var=element: " + s);
    b[s.substr(0, eq)] = element(l, s.substr(eq + 1));
  }
  auto free = f.free_variables();
  bool needs_var = false;
  for (const auto& v : free) needs_var = needs_var || !b.count(v);
  if (!needs_var) {
    bool ok = fo_eval(l, f, b);
    std::cout << (ok ? "true" : "false") << "\n";
    return ok ? kOk : kCheckFailed;
  }
  auto set = defined_set(l, f, var, b);
  std::cout << "{";
  bool first = true;
  for (Node x : set) {
    std::cout << (first ? "" : ", ") << l.label(x);
    first = false;
  }
  std::cout << "}\n";
  return kOk;
}

int cmd_semigroup_info(const std::string& file) {
  auto s = parse_cayley(read_file(file));
  auto p = classify_epigroup(s);
  std::cout << "order\t" << s.order() << "\n";
  std::cout << "zero\t" << (s.zero() ? s.name(*s.zero()) : "-") << "\n";
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "nil\t" << yn(p.is_nil) << "\ncompletely-regular\t" << yn(p.is_completely_regular)
            << "\ncombinatorial\t" << yn(p.is_combinatorial) << "\ngroup\t" << yn(p.is_group) << "\ncommutative\t"
            << yn(p.is_commutative) << "\nsemilattice\t" << yn(p.is_semilattice) << "\n";
  std::cout << "element\tomega\tpinv\n";
  for (Element x = 0; x < s.order(); ++x)
    std::cout << s.name(x) << "\t" << s.name(s.omega(x)) << "\t" << s.name(s.pinv(x)) << "\n";
  return kOk;
}

int cmd_li_build(int n_max, bool dot) {
  auto l = build_LI(n_max);
  std::cout << (dot ? to_dot(l, "LI") : format_lattice(l));
  return kOk;
}

int cmd_sublattice(const std::vector<std::string>& seed_args, const std::string& facts_file, bool dot) {
  std::vector<VarietyId> seeds;
  for (const auto& a : seed_args)
    for (const auto& s : split_variety_list(a, ' ')) seeds.push_back(parse_variety(s));
  if (seeds.empty()) throw Error("no seeds given");
  std::vector<OrderFact> facts;
  if (!facts_file.empty()) facts = parse_facts(read_file(facts_file));
  auto r = build_sublattice(seeds, facts);
  if (dot) {
    std::cout << to_dot(r.lattice, "sublattice");
    return kOk;
  }
  std::cout << format_lattice(r.lattice);
  for (const auto& p : r.provenance) std::cout << "# " << p << "\n";
  for (Node x = 0; x < r.lattice.size(); ++x) {
    auto p = special_profile(r.lattice, x);
    std::cout << "# " << r.lattice.label(x) << ": neutral=" << (p.has(Special::Neutral) ? "yes" : "no")
              << " modular=" << (p.has(Special::Modular) ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_deduce_verify(const std::string& file) {
  auto d = parse_deduction_file(read_file(file));
  auto rep = verify_deduction(d.terms, d.theories);
  std::cout << "step\tfrom\tto\ttheory\trule\tsubstitution\tcontext\n";
  for (std::size_t i = 0; i < rep.steps.size(); ++i) {
    const auto& s = rep.steps[i];
    std::string sub;
    for (const auto& [k, v] : s.substitution) sub += (sub.empty() ? "" : ", ") + k + "->" + v.str();
    std::cout << i + 1 << "\t" << s.from.str() << "\t" << s.to.str() << "\t" << s.theory << "\t" << s.tag << "\t" << sub
              << "\t" << s.context.str() << "\n";
  }
  if (!rep.ok) {
    std::cout << "rejected";
    if (rep.failed_at) std::cout << " at step " << *rep.failed_at + 1;
    std::cout << ": " << rep.message << "\n";
    return kCheckFailed;
  }
  std::cout << "accepted\n";
  return kOk;
}

int cmd_deduce_search(const std::string& lhs, const std::string& rhs, const std::string& theory, bool epi, int depth,
                      int cap) {
  Theory th = theory_of(parse_variety(theory), epi);
  Term u = parse_term(lhs);
  SearchResult r = rhs == "0" ? search_zero(u, th, depth, cap) : search_deduction(u, parse_term(rhs), th, depth, cap);
  std::cout << to_string(r.status) << "\texplored " << r.explored << "\n";
  for (const auto& t : r.sequence) std::cout << t.str() << "\n";
  return r.status == SearchStatus::Found ? kOk : kCheckFailed;
}

int cmd_suite(const std::vector<std::string>& names, SuiteParams p) {
  if (const char* s = std::getenv("EPILAT_SEED")) p.seed = std::stoull(s);
  std::vector<std::string> run = names;
  if (run.size() == 1 && run[0] == "all") run = suite_names();
  bool ok = true;
  for (const auto& n : run) {
    auto r = run_suite(n, p);
    std::cout << r.str();
    ok = ok && r.ok();
  }
  return ok ? kOk : kCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Special elements of the lattice of epigroup varieties"};
  app.require_subcommand(1);
  int rc = kOk;

  auto* check = app.add_subcommand("check", "Decide an identity in a variety");
  std::string variety, identity;
  check->add_option("variety", variety)->required();
  check->add_option("identity", identity)->required();
  check->callback([&] { rc = cmd_check(variety, identity); });

  auto* status = app.add_subcommand("status", "Classification verdicts for a variety");
  bool with_sl = false, with_zm = false;
  status->add_option("variety", variety)->required();
  status->add_flag("--sl", with_sl, "Join with SL");
  status->add_flag("--zm", with_zm, "Join with ZM");
  status->callback([&] { rc = cmd_status(variety, with_sl, with_zm); });

  auto* lattice = app.add_subcommand("lattice", "Finite lattice tools");
  lattice->require_subcommand(1);
  std::string lat_file, formula_file, var = "x";
  std::vector<std::string> elems, binds;
  auto load = [&] { return parse_lattice(read_file(lat_file)); };
  auto* profile = lattice->add_subcommand("profile", "Special element types");
  profile->add_option("file", lat_file)->required();
  profile->add_option("elements", elems);
  profile->callback([&] { rc = cmd_lattice_profile(load(), elems); });
  auto* props = lattice->add_subcommand("props", "Modularity and distributivity");
  props->add_option("file", lat_file)->required();
  props->callback([&] { rc = cmd_lattice_props(load()); });
  auto* fo = lattice->add_subcommand("fo", "Evaluate a first-order formula file");
  fo->add_option("file", lat_file)->required();
  fo->add_option("formula", formula_file)->required();
  fo->add_option("--var", var, "Variable whose defined set is printed");
  fo->add_option("--bind", binds, "Fix a free variable, var=element");
  fo->callback([&] { rc = cmd_lattice_fo(load(), formula_file, var, binds); });
  auto* dot = lattice->add_subcommand("dot", "Hasse diagram as DOT");
  dot->add_option("file", lat_file)->required();
  dot->callback([&] {
    std::cout << to_dot(load());
    rc = kOk;
  });

  auto* semigroup = app.add_subcommand("semigroup", "Finite epigroups");
  semigroup->require_subcommand(1);
  std::string cayley;
  auto* info = semigroup->add_subcommand("info", "Omega, pseudo-inverse and structure of a Cayley table");
  info->add_option("file", cayley)->required();
  info->callback([&] { rc = cmd_semigroup_info(cayley); });

  auto* li = app.add_subcommand("li", "The L/K/J/I lattice");
  li->require_subcommand(1);
  int n_max = 8;
  bool as_dot = false;
  auto* li_build = li->add_subcommand("build", "Build the lattice up to n_max");
  li_build->add_option("n_max", n_max)->required()->check(CLI::Range(1, 40));
  li_build->add_flag("--dot", as_dot);
  li_build->callback([&] { rc = cmd_li_build(n_max, as_dot); });

  auto* sub = app.add_subcommand("sublattice", "Sublattice generated by seed varieties under join");
  std::vector<std::string> seeds;
  std::string facts;
  sub->add_option("--seeds", seeds, "Variety names (space, comma or separate arguments)")->required();
  sub->add_option("--facts", facts, "File of cited order facts");
  sub->add_flag("--dot", as_dot);
  sub->callback([&] { rc = cmd_sublattice(seeds, facts, as_dot); });

  auto* deduce = app.add_subcommand("deduce", "Deductions from identities");
  deduce->require_subcommand(1);
  std::string ded_file, lhs, rhs, theory;
  bool epi = false;
  int depth = kDefaultSearchDepth, cap = kDefaultSizeCap;
  auto* verify = deduce->add_subcommand("verify", "Check a deduction file step by step");
  verify->add_option("file", ded_file)->required();
  verify->callback([&] { rc = cmd_deduce_verify(ded_file); });
  auto* search = deduce->add_subcommand("search", "Bounded search for u = v (v may be 0)");
  search->add_option("theory", theory)->required();
  search->add_option("lhs", lhs)->required();
  search->add_option("rhs", rhs)->required();
  search->add_flag("--epi", epi, "Include the epigroup axioms");
  search->add_option("--depth", depth);
  search->add_option("--size-cap", cap);
  search->callback([&] { rc = cmd_deduce_search(lhs, rhs, theory, epi, depth, cap); });

  auto* suite = app.add_subcommand("suite", "Run verification suites");
  std::vector<std::string> suite_list;
  SuiteParams sp;
  suite->add_option("names", suite_list, "Suite names or 'all'")->required();
  suite->add_option("--lattice-max", sp.lattice_max)->check(CLI::Range(1, 7));
  suite->add_option("--n-max", sp.n_max)->check(CLI::Range(4, 20));
  suite->add_option("--max-occurrences", sp.bounds.max_occurrences)->check(CLI::Range(1, 7));
  suite->add_option("--letters", sp.bounds.letters)->check(CLI::Range(1, 3));
  suite->add_option("--max-depth", sp.bounds.max_depth)->check(CLI::Range(0, 2));
  suite->add_option("--model-order", sp.bounds.model_order)->check(CLI::Range(0, 4));
  suite->add_option("--q-length", sp.q_length)->check(CLI::Range(1, 6));
  suite->add_option("--depth", sp.depth);
  suite->add_option("--size-cap", sp.size_cap);
  suite->callback([&] { rc = cmd_suite(suite_list, sp); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return rc;
}

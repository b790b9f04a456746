#include "epilat/deduction.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace epilat {

std::vector<TaggedIdentity> epigroup_axioms() {
  return {{"epi-inverse", parse_identity("~(x) = x ~(x) ~(x)")},
          {"epi-commute", parse_identity("x ~(x) = ~(x) x")},
          {"epi-double", parse_identity("~(~(x)) = ~(~(x)) ~(x) x")}};
}

std::vector<TaggedIdentity> Theory::rules() const {
  std::vector<TaggedIdentity> out;
  std::set<std::string> tags;
  auto add = [&](const TaggedIdentity& t) {
    auto parts = expand_zero(t.identity);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::string tag = parts.size() == 1 ? t.tag : t.tag + (i == 0 ? "/right" : "/left");
      if (!tags.insert(tag).second) throw Error("theory " + name + ": duplicate tag '" + tag + "'");
      out.push_back({tag, parts[i]});
    }
  };
  for (const auto& t : identities) add(t);
  if (includes_epi_axioms)
    for (const auto& t : epigroup_axioms()) add(t);
  return out;
}

Theory theory_of(const VarietyId& v, bool with_epi_axioms) {
  Theory th;
  th.name = v.name();
  auto b = basis(v);
  for (std::size_t i = 0; i < b.size(); ++i) th.identities.push_back({v.name() + "#" + std::to_string(i + 1), b[i]});
  th.includes_epi_axioms = with_epi_axioms;
  return th;
}

std::string Context::str() const {
  std::string out;
  for (auto p : path) out += std::to_string(p) + "/";
  return out + "[" + std::to_string(begin) + "," + std::to_string(end) + ")";
}

namespace {

struct Rule {
  std::string tag;
  Identity oriented;
};

std::vector<Rule> oriented_rules(const Theory& th) {
  std::vector<Rule> out;
  for (const auto& t : th.rules()) {
    out.push_back({t.tag, t.identity});
    out.push_back({t.tag + "^-1", Identity{*t.identity.rhs, t.identity.lhs}});
  }
  return out;
}

const std::vector<Factor>& level(const Term& t, const std::vector<std::size_t>& path) {
  const std::vector<Factor>* seq = &t.factors();
  for (auto p : path) seq = &(*seq)[p].argument;
  return *seq;
}

std::vector<Factor> replace_at(const std::vector<Factor>& seq, const std::vector<std::size_t>& path, std::size_t depth,
                               std::size_t b, std::size_t e, const std::vector<Factor>& with) {
  std::vector<Factor> out;
  if (depth == path.size()) {
    out.assign(seq.begin(), seq.begin() + b);
    out.insert(out.end(), with.begin(), with.end());
    out.insert(out.end(), seq.begin() + e, seq.end());
    return out;
  }
  out = seq;
  out[path[depth]].argument = replace_at(seq[path[depth]].argument, path, depth + 1, b, e, with);
  return out;
}

bool try_level(const std::vector<Factor>& s1, const std::vector<Factor>& s2, std::vector<std::size_t>& path,
               const std::vector<Rule>& rules, std::optional<DeductionStep>& out) {
  const std::size_t n1 = s1.size(), n2 = s2.size();
  std::size_t cp = 0;
  while (cp < n1 && cp < n2 && s1[cp] == s2[cp]) ++cp;
  std::size_t cs = 0;
  while (cs < n1 && cs < n2 && s1[n1 - 1 - cs] == s2[n2 - 1 - cs]) ++cs;
  for (std::size_t i = 0; i <= cp && i < n1; ++i)
    for (std::size_t j = i + 1; j <= n1; ++j) {
      if (n1 - j > cs) continue;
      if (n2 < (n1 - j) + i + 1) continue;
      std::size_t yend = n2 - (n1 - j);
      std::span<const Factor> x(s1.data() + i, j - i), y(s2.data() + i, yend - i);
      for (const auto& r : rules) {
        bool hit = false;
        for_each_match(r.oriented.lhs.factors(), x, [&](const Substitution& sigma) {
          for_each_match(
              r.oriented.rhs->factors(), y,
              [&](const Substitution& full) {
                out = DeductionStep{Term({Factor{}}), Term({Factor{}}), "", r.tag, r.oriented, full,
                                    Context{path, i, j}};
                hit = true;
                return false;
              },
              sigma);
          return !hit;
        });
        if (hit) return true;
      }
    }
  if (n1 == n2) {
    std::vector<std::size_t> diff;
    for (std::size_t k = 0; k < n1; ++k)
      if (!(s1[k] == s2[k])) diff.push_back(k);
    if (diff.size() == 1 && s1[diff[0]].is_inverse() && s2[diff[0]].is_inverse()) {
      path.push_back(diff[0]);
      bool r = try_level(s1[diff[0]].argument, s2[diff[0]].argument, path, rules, out);
      path.pop_back();
      return r;
    }
  }
  return false;
}

} // namespace

Term apply_step(const Term& from, const Identity& oriented, const Substitution& s, const Context& c) {
  Term img = substitute(*oriented.rhs, s);
  return Term(replace_at(from.factors(), c.path, 0, c.begin, c.end, img.factors()));
}

std::optional<DeductionStep> one_step(const Term& w, const Term& w2, const Theory& th) {
  auto rules = oriented_rules(th);
  std::optional<DeductionStep> out;
  std::vector<std::size_t> path;
  if (!try_level(w.factors(), w2.factors(), path, rules, out)) return std::nullopt;
  out->from = w;
  out->to = w2;
  out->theory = th.name;
  return out;
}

DeductionReport verify_deduction(const std::vector<Term>& seq, const std::vector<Theory>& theories) {
  DeductionReport r;
  if (seq.size() < 2) {
    r.message = "a deduction needs at least two terms";
    return r;
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    std::optional<DeductionStep> step;
    for (const auto& th : theories)
      if ((step = one_step(seq[i], seq[i + 1], th))) break;
    if (!step) {
      r.failed_at = i;
      r.message = "step " + std::to_string(i + 1) + ": no single rewrite turns " + seq[i].str() + " into " +
                  seq[i + 1].str();
      return r;
    }
    r.steps.push_back(*step);
  }
  r.ok = true;
  return r;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NotFound: return "not-found";
    case SearchStatus::BoundExceeded: return "bound-exceeded";
  }
  return "?";
}

namespace {

void collect_levels(const std::vector<Factor>& seq, std::vector<std::size_t>& path,
                    std::vector<std::vector<std::size_t>>& out) {
  out.push_back(path);
  for (std::size_t k = 0; k < seq.size(); ++k)
    if (seq[k].is_inverse()) {
      path.push_back(k);
      collect_levels(seq[k].argument, path, out);
      path.pop_back();
    }
}

// Every term reachable in one rewrite; `capped` is set when the size cap removed one.
std::vector<Term> neighbours(const Term& w, const std::vector<Rule>& rules, const std::vector<Symbol>& pool,
                             std::size_t size_cap, bool& capped) {
  std::set<Term> out;
  std::vector<std::vector<std::size_t>> levels;
  std::vector<std::size_t> path;
  collect_levels(w.factors(), path, levels);
  for (const auto& lv : levels) {
    const auto& seq = level(w, lv);
    for (std::size_t i = 0; i < seq.size(); ++i)
      for (std::size_t j = i + 1; j <= seq.size(); ++j) {
        std::span<const Factor> x(seq.data() + i, j - i);
        for (const auto& r : rules) {
          for_each_match(r.oriented.lhs.factors(), x, [&](const Substitution& sigma) {
            std::vector<Symbol> unbound;
            for (const auto& l : content(*r.oriented.rhs))
              if (!sigma.count(l)) unbound.push_back(l);
            std::vector<std::size_t> pick(unbound.size(), 0);
            while (true) {
              Substitution s = sigma;
              for (std::size_t k = 0; k < unbound.size(); ++k) s.insert_or_assign(unbound[k], Term::letter(pool[pick[k]]));
              Term nw = apply_step(w, r.oriented, s, Context{lv, i, j});
              if (nw.symbol_count() > size_cap)
                capped = true;
              else
                out.insert(std::move(nw));
              std::size_t k = 0;
              while (k < pick.size() && ++pick[k] == pool.size()) pick[k++] = 0;
              if (k == pick.size()) break;
            }
            return true;
          });
        }
      }
  }
  return {out.begin(), out.end()};
}

} // namespace

SearchResult search_deduction(const Term& u, const Term& v, const Theory& th, int depth, int size_cap) {
  SearchResult res;
  auto rules = oriented_rules(th);
  std::set<Symbol> letters = content(u);
  auto cv = content(v);
  letters.insert(cv.begin(), cv.end());
  std::vector<Symbol> pool(letters.begin(), letters.end());
  std::map<Term, Term> parent;
  parent.emplace(u, u);
  std::vector<Term> frontier{u};
  bool cut = false;
  auto trace = [&](Term t) {
    std::vector<Term> seq{t};
    while (!(t == u)) {
      t = parent.at(t);
      seq.push_back(t);
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
  };
  if (u == v) {
    res.status = SearchStatus::Found;
    res.sequence = {u};
    return res;
  }
  for (int d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<Term> next;
    for (const auto& w : frontier) {
      ++res.explored;
      for (auto& nw : neighbours(w, rules, pool, static_cast<std::size_t>(size_cap), cut)) {
        if (parent.count(nw)) continue;
        parent.emplace(nw, w);
        if (nw == v) {
          res.status = SearchStatus::Found;
          res.sequence = trace(nw);
          return res;
        }
        next.push_back(nw);
      }
    }
    frontier = std::move(next);
  }
  res.status = (cut || !frontier.empty()) ? SearchStatus::BoundExceeded : SearchStatus::NotFound;
  return res;
}

SearchResult search_zero(const Term& u, const Theory& th, int depth, int size_cap) {
  Term z = Term::letter(fresh_letter({u}));
  return search_deduction(u, Term::product(u, z), th, depth, size_cap);
}

DeductionFile parse_deduction_file(const std::string& text) {
  DeductionFile f;
  Theory axioms;
  axioms.name = "axioms";
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
    std::string where = "deduction line " + std::to_string(lineno) + ": ";
    try {
      if (line.rfind("theory:", 0) == 0) {
        std::string name = line.substr(7);
        name = name.substr(name.find_first_not_of(" \t"));
        if (name == "epi") {
          Theory t;
          t.name = "epi";
          t.includes_epi_axioms = true;
          f.theories.push_back(t);
        } else {
          f.theories.push_back(theory_of(parse_variety(name)));
        }
      } else if (line.rfind("axiom", 0) == 0 && line.find(':') != std::string::npos) {
        auto colon = line.find(':');
        std::string tag = line.substr(5, colon - 5);
        tag.erase(0, tag.find_first_not_of(" \t"));
        tag.erase(tag.find_last_not_of(" \t") + 1);
        if (tag.empty()) throw Error("axiom needs a tag");
        axioms.identities.push_back({tag, parse_identity(line.substr(colon + 1))});
      } else {
        f.terms.push_back(parse_term(line));
      }
    } catch (const Error& e) {
      throw Error(where + e.what());
    }
  }
  if (!axioms.identities.empty()) f.theories.push_back(axioms);
  if (f.theories.empty()) throw Error("deduction file names no theory");
  return f;
}

} // namespace epilat

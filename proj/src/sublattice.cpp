#include "epilat/sublattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace epilat {

FiniteLattice build_LI(int n_max) {
  if (n_max < 4) throw Error("build_LI needs n_max >= 4");
  std::vector<VarietyId> nodes;
  for (int k = 1; k <= n_max; ++k) nodes.push_back(make_variety(Family::Ln, k));
  for (int k = 3; k <= n_max; ++k) nodes.push_back(make_variety(Family::Kn, k));
  for (int k = 4; k <= n_max; ++k) nodes.push_back(make_variety(Family::Jn, k));
  for (int k = 4; k <= n_max; ++k) nodes.push_back(make_variety(Family::In, k));
  for (Family f : {Family::L, Family::K, Family::J, Family::I}) nodes.push_back(make_variety(f));
  const int n = static_cast<int>(nodes.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(nodes[a].name());
    for (int b = 0; b < n; ++b) leq[a][b] = contains(nodes[b], nodes[a]);
  }
  return FiniteLattice::from_leq(std::move(leq), std::move(labels));
}

FiniteLattice expected_LI(int n_max) {
  if (n_max < 4) throw Error("expected_LI needs n_max >= 4");
  const char* names[] = {"L", "K", "J", "I"};
  const int col_min[] = {1, 3, 4, 4};
  const int limit = n_max + 1;
  std::vector<std::pair<int, int>> pos;
  std::vector<std::string> labels;
  for (int c = 0; c < 4; ++c) {
    for (int k = col_min[c]; k <= n_max; ++k) {
      pos.emplace_back(c, k);
      labels.push_back(std::string(names[c]) + "(" + std::to_string(k) + ")");
    }
  }
  for (int c = 0; c < 4; ++c) {
    pos.emplace_back(c, limit);
    labels.push_back(names[c]);
  }
  const int n = static_cast<int>(pos.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq[a][b] = pos[a].first <= pos[b].first && pos[a].second <= pos[b].second;
  return FiniteLattice::from_leq(std::move(leq), std::move(labels));
}

std::vector<std::string> split_variety_list(const std::string& text, char separator) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    auto b = cur.find_first_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, cur.find_last_not_of(" \t") - b + 1));
    cur.clear();
  };
  for (char c : text) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    bool sep = depth == 0 && (separator == ' ' ? (c == ' ' || c == '\t' || c == ',') : c == separator);
    if (sep)
      flush();
    else
      cur += c;
  }
  if (depth != 0) throw Error("unbalanced brackets in '" + text + "'");
  flush();
  return out;
}

std::vector<OrderFact> parse_facts(const std::string& text) {
  std::vector<OrderFact> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    auto bar = line.find('|');
    std::string where = "facts line " + std::to_string(lineno);
    if (bar == std::string::npos) throw Error(where + ": missing '| citation'");
    std::string citation = line.substr(bar + 1);
    auto cb = citation.find_first_not_of(" \t\r");
    if (cb == std::string::npos) throw Error(where + ": empty citation");
    citation = citation.substr(cb, citation.find_last_not_of(" \t\r") - cb + 1);
    std::string rel = line.substr(0, bar);
    OrderFact f;
    f.citation = citation;
    auto op = rel.find("!<=");
    std::size_t oplen = 3;
    if (op == std::string::npos) {
      op = rel.find("<=");
      oplen = 2;
    } else {
      f.holds = false;
    }
    if (op == std::string::npos) throw Error(where + ": expected '<=' or '!<='");
    f.lower = parse_variety(rel.substr(0, op));
    for (const auto& n : split_variety_list(rel.substr(op + oplen), '+')) f.join.push_back(parse_variety(n));
    if (f.join.empty()) throw Error(where + ": empty join");
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

bool same(const VarietyId& a, const VarietyId& b) { return contains(a, b) && contains(b, a); }

std::string join_name(const std::vector<VarietyId>& js) {
  std::string out;
  for (const auto& j : js) out += (out.empty() ? "" : " v ") + j.name();
  return out;
}

// Identities holding in SL together with each seed's identities, used to
// separate a variety from a join.
std::vector<Identity> separator_pool(const std::vector<VarietyId>& seeds) {
  std::vector<Identity> pool = {parse_identity("(x^w y^w x^w)^w = x^w"), parse_identity("x = ~(~(x))"),
                                parse_identity("x y = y x"), parse_identity("x x y = x y")};
  for (const auto& s : seeds)
    for (const auto& b : basis(s)) {
      pool.push_back(b);
      if (b.is_zero()) pool.push_back(Identity{b.lhs, Term::product(b.lhs, b.lhs)});
    }
  return pool;
}

} // namespace

SublatticeResult build_sublattice(const std::vector<VarietyId>& seeds, const std::vector<OrderFact>& facts) {
  if (seeds.empty()) throw Error("no seeds");
  if (seeds.size() > 12) throw Error("too many seeds");
  for (const auto& f : facts)
    if (f.citation.empty()) throw Error("fact without citation");
  SublatticeResult r;
  const auto pool = separator_pool(seeds);
  std::map<std::pair<std::string, std::string>, bool> memo;

  // Is the single variety a below the formal join js?
  auto below = [&](const VarietyId& a, const std::vector<VarietyId>& js) -> bool {
    auto key = std::pair{a.name(), join_name(js)};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    auto record = [&](bool v, const std::string& rule) {
      memo[key] = v;
      if (js.size() > 1)
        r.provenance.push_back(a.name() + (v ? " <= " : " !<= ") + join_name(js) + "  [" + rule + "]");
      return v;
    };
    for (const auto& j : js)
      if (contains(j, a)) return record(true, "contained in " + j.name());
    if (js.size() == 1) return record(false, "containment fails");
    for (Atom at : {Atom::SL, Atom::ZM}) {
      VarietyId av = make_variety(at == Atom::SL ? Family::SL : Family::ZM);
      if (same(a, av)) {
        bool in = std::any_of(js.begin(), js.end(), [&](const VarietyId& j) { return contains_atom(j, at); });
        return record(in, "atom test");
      }
    }
    for (const auto& id : pool) {
      bool all = std::all_of(js.begin(), js.end(), [&](const VarietyId& j) { return decide(j, id); });
      if (all && !decide(a, id)) return record(false, "separated by " + id.str());
    }
    for (const auto& f : facts) {
      if (!same(f.lower, a) || f.join.size() != js.size()) continue;
      bool match = std::all_of(f.join.begin(), f.join.end(), [&](const VarietyId& x) {
        return std::any_of(js.begin(), js.end(), [&](const VarietyId& j) { return same(x, j); });
      });
      if (match) return record(f.holds, "fact: " + f.citation);
    }
    throw Error("cannot decide whether " + a.name() + " <= " + join_name(js) +
                "; add a fact line 'A <= B + C | citation' or 'A !<= B + C | citation'");
  };
  auto leq_join = [&](const std::vector<VarietyId>& as, const std::vector<VarietyId>& bs) {
    return std::all_of(as.begin(), as.end(), [&](const VarietyId& a) { return below(a, bs); });
  };

  // All subsets, reduced to their maximal members, deduplicated up to equality.
  std::vector<std::vector<VarietyId>> nodes;
  const std::size_t k = seeds.size();
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<VarietyId> js;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) js.push_back(seeds[i]);
    std::vector<VarietyId> reduced;
    for (std::size_t i = 0; i < js.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < js.size() && !dominated; ++j) {
        if (i == j || !contains(js[j], js[i])) continue;
        // Keep the earlier of two equal varieties.
        dominated = !contains(js[i], js[j]) || j < i;
      }
      if (!dominated) reduced.push_back(js[i]);
    }
    bool dup = false;
    for (const auto& n : nodes)
      if (leq_join(n, reduced) && leq_join(reduced, n)) dup = true;
    if (!dup) nodes.push_back(reduced);
  }
  std::sort(nodes.begin(), nodes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return join_name(a) < join_name(b);
  });
  const int n = static_cast<int>(nodes.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(join_name(nodes[a]));
    for (int b = 0; b < n; ++b) leq[a][b] = leq_join(nodes[a], nodes[b]);
  }
  r.lattice = FiniteLattice::from_leq(std::move(leq), std::move(labels));
  r.members = nodes;
  return r;
}

} // namespace epilat

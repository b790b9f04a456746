#include "epilat/epigroup.hpp"

#include <algorithm>
#include <sstream>

namespace epilat {

FiniteEpigroup FiniteEpigroup::from_cayley(std::vector<std::string> carrier,
                                           std::vector<std::vector<Element>> table) {
  const int n = static_cast<int>(carrier.size());
  if (n == 0) throw Error("empty carrier");
  if (static_cast<int>(table.size()) != n) throw Error("table has wrong number of rows");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw Error("table row has wrong length");
    for (Element e : row)
      if (e < 0 || e >= n) throw Error("table entry outside carrier");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw NonAssociativeError(a, b, c,
                                    "table is not associative: (" + carrier[a] + " " + carrier[b] + ") " +
                                        carrier[c] + " != " + carrier[a] + " (" + carrier[b] + " " +
                                        carrier[c] + ")");

  FiniteEpigroup s;
  s.carrier_ = std::move(carrier);
  s.table_ = std::move(table);
  s.omega_.assign(n, 0);
  s.pinv_.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    // Powers x, x^2, ... until the first repeat; the tail after `first` is the cycle.
    std::vector<Element> powers{x};
    std::vector<int> seen(n, -1);
    seen[x] = 0;
    int first = 0;
    while (true) {
      Element next = s.table_[powers.back()][x];
      if (seen[next] >= 0) {
        first = seen[next];
        break;
      }
      seen[next] = static_cast<int>(powers.size());
      powers.push_back(next);
    }
    Element e = -1;
    for (std::size_t i = first; i < powers.size(); ++i)
      if (s.table_[powers[i]][powers[i]] == powers[i]) e = powers[i];
    s.omega_[x] = e;
    Element g = s.table_[x][e];
    // The cycle is a cyclic group with identity e; find the inverse of x e.
    for (std::size_t i = first; i < powers.size(); ++i)
      if (s.table_[g][powers[i]] == e) s.pinv_[x] = powers[i];
  }
  for (int z = 0; z < n; ++z) {
    bool ok = true;
    for (int t = 0; t < n && ok; ++t) ok = s.table_[z][t] == z && s.table_[t][z] == z;
    if (ok) s.zero_ = z;
  }
  return s;
}

Element FiniteEpigroup::index_of(const std::string& name) const {
  auto it = std::find(carrier_.begin(), carrier_.end(), name);
  if (it == carrier_.end()) throw Error("unknown element '" + name + "'");
  return static_cast<Element>(it - carrier_.begin());
}

namespace {

Element eval_factors(const FiniteEpigroup& s, const std::vector<Factor>& fs, const Assignment& a) {
  Element acc = -1;
  for (const auto& f : fs) {
    Element v;
    if (f.is_letter()) {
      auto it = a.find(f.letter);
      if (it == a.end()) throw Error("assignment does not map letter '" + f.letter + "'");
      v = it->second;
    } else {
      v = s.pinv(eval_factors(s, f.argument, a));
    }
    acc = acc < 0 ? v : s.mul(acc, v);
  }
  return acc;
}

// Letters indexed densely so that the inner loop avoids map lookups.
struct CompiledTerm {
  struct Node {
    int letter = -1; // >= 0 for a letter
    std::vector<Node> children;
  };
  std::vector<Node> factors;
};

CompiledTerm::Node compile_factor(const Factor& f, const std::vector<Symbol>& letters) {
  CompiledTerm::Node n;
  if (f.is_letter()) {
    n.letter = static_cast<int>(std::find(letters.begin(), letters.end(), f.letter) - letters.begin());
  } else {
    for (const auto& g : f.argument) n.children.push_back(compile_factor(g, letters));
  }
  return n;
}

CompiledTerm compile(const Term& t, const std::vector<Symbol>& letters) {
  CompiledTerm c;
  for (const auto& f : t.factors()) c.factors.push_back(compile_factor(f, letters));
  return c;
}

Element run(const FiniteEpigroup& s, const std::vector<CompiledTerm::Node>& fs, const std::vector<Element>& v) {
  Element acc = -1;
  for (const auto& f : fs) {
    Element x = f.letter >= 0 ? v[f.letter] : s.pinv(run(s, f.children, v));
    acc = acc < 0 ? x : s.mul(acc, x);
  }
  return acc;
}

} // namespace

Element eval_term(const FiniteEpigroup& s, const Term& t, const Assignment& a) {
  return eval_factors(s, t.factors(), a);
}

std::optional<Assignment> counterexample(const FiniteEpigroup& s, const Identity& id) {
  auto pairs = expand_zero(id);
  for (const auto& p : pairs) {
    std::set<Symbol> letters = content(p.lhs);
    auto cr = content(*p.rhs);
    letters.insert(cr.begin(), cr.end());
    std::vector<Symbol> ls(letters.begin(), letters.end());
    auto cu = compile(p.lhs, ls), cv = compile(*p.rhs, ls);
    std::vector<Element> v(ls.size(), 0);
    const int n = s.order();
    while (true) {
      if (run(s, cu.factors, v) != run(s, cv.factors, v)) {
        Assignment a;
        for (std::size_t i = 0; i < ls.size(); ++i) a[ls[i]] = v[i];
        return a;
      }
      std::size_t i = 0;
      while (i < v.size() && ++v[i] == n) v[i++] = 0;
      if (i == v.size()) break;
    }
  }
  return std::nullopt;
}

bool satisfies(const FiniteEpigroup& s, const Identity& id) { return !counterexample(s, id).has_value(); }

EpigroupProfile classify_epigroup(const FiniteEpigroup& s) {
  EpigroupProfile p;
  p.is_completely_regular = satisfies(s, parse_identity("x = ~(~(x))"));
  p.is_nil = s.zero().has_value() && satisfies(s, parse_identity("~(x) = 0"));
  p.is_combinatorial = satisfies(s, parse_identity("~(x) = x ~(x)"));
  p.is_commutative = satisfies(s, parse_identity("x y = y x"));
  p.is_semilattice = p.is_commutative && satisfies(s, parse_identity("x x = x"));
  for (int x = 0; x < s.order(); ++x)
    if (s.mul(x, s.omega(x)) == x) p.group_elements.push_back(x);
  int idempotents = 0;
  for (int x = 0; x < s.order(); ++x) idempotents += s.mul(x, x) == x;
  p.is_group = p.is_completely_regular && idempotents == 1;
  return p;
}

namespace {

std::vector<std::vector<Element>> table_of(int n, auto&& f) {
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = f(i, j);
  return t;
}

} // namespace

FiniteEpigroup builtin(const std::string& name, int m) {
  if (name == "SL2") return FiniteEpigroup::from_cayley({"0", "1"}, table_of(2, [](int i, int j) { return std::min(i, j); }));
  if (name == "NULL2") return FiniteEpigroup::from_cayley({"0", "a"}, table_of(2, [](int, int) { return 0; }));
  if (name == "LZ2") return FiniteEpigroup::from_cayley({"a", "b"}, table_of(2, [](int i, int) { return i; }));
  if (name == "RZ2") return FiniteEpigroup::from_cayley({"a", "b"}, table_of(2, [](int, int j) { return j; }));
  if (name == "Cm") {
    // Monoid {1, c, ..., c^m} with c^m = c^(m+1); element k is c^k.
    if (m < 0) throw Error("Cm needs m >= 0");
    std::vector<std::string> carrier{"1"};
    for (int k = 1; k <= m; ++k) carrier.push_back(k == 1 ? "c" : "c^" + std::to_string(k));
    return FiniteEpigroup::from_cayley(carrier, table_of(m + 1, [m](int i, int j) { return std::min(i + j, m); }));
  }
  if (name == "Zn") {
    if (m < 1) throw Error("Zn needs n >= 1");
    std::vector<std::string> carrier;
    for (int k = 0; k < m; ++k) carrier.push_back("g" + std::to_string(k));
    return FiniteEpigroup::from_cayley(carrier, table_of(m, [m](int i, int j) { return (i + j) % m; }));
  }
  if (name == "Dm") {
    // {d, d^2, ..., d^m} with d^m = d^(m+1); element k is d^(k+1).
    if (m < 1) throw Error("Dm needs m >= 1");
    std::vector<std::string> carrier;
    for (int k = 1; k <= m; ++k) carrier.push_back(k == 1 ? "d" : "d^" + std::to_string(k));
    return FiniteEpigroup::from_cayley(carrier, table_of(m, [m](int i, int j) { return std::min(i + j + 1, m - 1); }));
  }
  throw Error("unknown builtin epigroup '" + name + "'");
}

std::vector<std::pair<std::string, FiniteEpigroup>> builtin_catalog() {
  std::vector<std::pair<std::string, FiniteEpigroup>> out;
  for (const char* n : {"SL2", "NULL2", "LZ2", "RZ2"}) out.emplace_back(n, builtin(n));
  for (int m = 0; m <= 3; ++m) out.emplace_back("C" + std::to_string(m), builtin("Cm", m));
  for (int n = 1; n <= 4; ++n) out.emplace_back("Z" + std::to_string(n), builtin("Zn", n));
  for (int m = 1; m <= 3; ++m) out.emplace_back("D" + std::to_string(m), builtin("Dm", m));
  return out;
}

FiniteEpigroup direct_product(const FiniteEpigroup& s, const FiniteEpigroup& t) {
  const int a = s.order(), b = t.order();
  std::vector<std::string> carrier;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) carrier.push_back("(" + s.name(i) + "," + t.name(j) + ")");
  auto table = table_of(a * b, [&](int x, int y) {
    return s.mul(x / b, y / b) * b + t.mul(x % b, y % b);
  });
  auto p = FiniteEpigroup::from_cayley(std::move(carrier), std::move(table));
  for (int x = 0; x < a * b; ++x) {
    if (p.omega(x) != s.omega(x / b) * b + t.omega(x % b) || p.pinv(x) != s.pinv(x / b) * b + t.pinv(x % b))
      throw Error("direct product: unary operations are not componentwise");
  }
  return p;
}

FiniteEpigroup parse_cayley(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string tok; ls >> tok;) toks.push_back(tok);
    if (!toks.empty()) rows.push_back(std::move(toks));
  }
  if (rows.empty()) throw Error("cayley file: missing carrier line");
  std::vector<std::string> carrier = rows[0];
  const std::size_t n = carrier.size();
  if (rows.size() != n + 1) throw Error("cayley file: expected " + std::to_string(n) + " table rows");
  std::vector<std::vector<Element>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i + 1].size() != n) throw Error("cayley file: row " + std::to_string(i + 1) + " has wrong length");
    for (const auto& tok : rows[i + 1]) {
      auto it = std::find(carrier.begin(), carrier.end(), tok);
      if (it == carrier.end()) throw Error("cayley file: entry '" + tok + "' outside carrier");
      table[i].push_back(static_cast<Element>(it - carrier.begin()));
    }
  }
  return FiniteEpigroup::from_cayley(std::move(carrier), std::move(table));
}

} // namespace epilat

#include "epilat/lattice.hpp"

namespace epilat {

namespace {

std::optional<Node> extremum(const std::vector<std::vector<bool>>& leq, Node a, Node b, bool upper) {
  const int n = static_cast<int>(leq.size());
  std::vector<Node> bounds;
  for (Node c = 0; c < n; ++c)
    if (upper ? (leq[a][c] && leq[b][c]) : (leq[c][a] && leq[c][b])) bounds.push_back(c);
  for (Node c : bounds) {
    bool best = true;
    for (Node d : bounds) best = best && (upper ? leq[c][d] : leq[d][c]);
    if (best) return c;
  }
  return std::nullopt;
}

} // namespace

FiniteLattice FiniteLattice::from_leq(std::vector<std::vector<bool>> leq, std::vector<std::string> labels) {
  const int n = static_cast<int>(leq.size());
  if (n == 0) throw Error("lattice needs at least one element");
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  if (static_cast<int>(labels.size()) != n) throw Error("label count does not match element count");
  for (auto& row : leq)
    if (static_cast<int>(row.size()) != n) throw Error("order matrix is not square");
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i][k])
        for (int j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (leq[i][j] && leq[j][i]) throw Error("order has a cycle through " + labels[i] + " and " + labels[j]);

  FiniteLattice l;
  l.leq_ = std::move(leq);
  l.labels_ = std::move(labels);
  l.meet_.assign(n, std::vector<Node>(n));
  l.join_.assign(n, std::vector<Node>(n));
  for (Node a = 0; a < n; ++a)
    for (Node b = a; b < n; ++b) {
      auto m = extremum(l.leq_, a, b, false);
      if (!m) throw Error("not a lattice: no glb(" + l.labels_[a] + ", " + l.labels_[b] + ")");
      auto j = extremum(l.leq_, a, b, true);
      if (!j) throw Error("not a lattice: no lub(" + l.labels_[a] + ", " + l.labels_[b] + ")");
      l.meet_[a][b] = l.meet_[b][a] = *m;
      l.join_[a][b] = l.join_[b][a] = *j;
    }
  l.bottom_ = l.top_ = 0;
  for (Node a = 1; a < n; ++a) {
    l.bottom_ = l.meet_[l.bottom_][a];
    l.top_ = l.join_[l.top_][a];
  }
  return l;
}

FiniteLattice FiniteLattice::from_covers(int n, const std::vector<std::pair<Node, Node>>& covers,
                                         std::vector<std::string> labels) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (auto [a, b] : covers) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw Error("cover refers to an unknown element");
    leq[a][b] = true;
  }
  return from_leq(std::move(leq), std::move(labels));
}

std::optional<Node> FiniteLattice::find(const std::string& label) const {
  for (Node a = 0; a < size(); ++a)
    if (labels_[a] == label) return a;
  return std::nullopt;
}

std::vector<std::pair<Node, Node>> FiniteLattice::covers() const {
  std::vector<std::pair<Node, Node>> out;
  const int n = size();
  for (Node a = 0; a < n; ++a)
    for (Node b = 0; b < n; ++b) {
      if (a == b || !leq_[a][b]) continue;
      bool cover = true;
      for (Node c = 0; c < n && cover; ++c)
        if (c != a && c != b && leq_[a][c] && leq_[c][b]) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

FiniteLattice FiniteLattice::dual() const {
  FiniteLattice d;
  const int n = size();
  d.leq_.assign(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.leq_[i][j] = leq_[j][i];
  d.meet_ = join_;
  d.join_ = meet_;
  d.bottom_ = top_;
  d.top_ = bottom_;
  d.labels_ = labels_;
  return d;
}

std::string to_string(Special s) {
  switch (s) {
    case Special::Neutral: return "neutral";
    case Special::Standard: return "standard";
    case Special::Costandard: return "costandard";
    case Special::Distributive: return "distributive";
    case Special::Codistributive: return "codistributive";
    case Special::Modular: return "modular";
    case Special::LowerModular: return "lower-modular";
    case Special::UpperModular: return "upper-modular";
  }
  return "?";
}

namespace {

// The self-contained definitions; the remaining three types are their duals.
struct Primal {
  std::optional<std::pair<Node, Node>> neutral, standard, distributive, modular, upper_modular;
};

Primal primal_violations(const FiniteLattice& l, Node x) {
  Primal p;
  const int n = l.size();
  auto M = [&](Node a, Node b) { return l.meet(a, b); };
  auto J = [&](Node a, Node b) { return l.join(a, b); };
  for (Node y = 0; y < n; ++y)
    for (Node z = 0; z < n; ++z) {
      if (!p.neutral && M(M(J(x, y), J(y, z)), J(z, x)) != J(J(M(x, y), M(y, z)), M(z, x))) p.neutral = {y, z};
      if (!p.standard && M(J(x, y), z) != J(M(x, z), M(y, z))) p.standard = {y, z};
      if (!p.distributive && J(x, M(y, z)) != M(J(x, y), J(x, z))) p.distributive = {y, z};
      if (!p.modular && l.leq(y, z) && M(J(x, y), z) != J(M(x, z), y)) p.modular = {y, z};
      if (!p.upper_modular && l.leq(y, x) && M(J(z, y), x) != J(M(z, x), y)) p.upper_modular = {y, z};
    }
  return p;
}

} // namespace

SpecialProfile special_profile(const FiniteLattice& l, Node x) {
  if (x < 0 || x >= l.size()) throw Error("element outside the lattice");
  Primal p = primal_violations(l, x);
  Primal d = primal_violations(l.dual(), x);
  SpecialProfile s;
  auto put = [&](Special k, const std::optional<std::pair<Node, Node>>& w) {
    s.flags[static_cast<int>(k)] = !w.has_value();
    s.witnesses[static_cast<int>(k)] = w;
  };
  put(Special::Neutral, p.neutral);
  put(Special::Standard, p.standard);
  put(Special::Costandard, d.standard);
  put(Special::Distributive, p.distributive);
  put(Special::Codistributive, d.distributive);
  put(Special::Modular, p.modular);
  put(Special::LowerModular, d.upper_modular);
  put(Special::UpperModular, p.upper_modular);
  return s;
}

LatticeProps lattice_props(const FiniteLattice& l) {
  LatticeProps r;
  const int n = l.size();
  for (Node a = 0; a < n && !r.witness; ++a)
    for (Node b = 0; b < n && !r.witness; ++b) {
      if (a == b || !l.leq(a, b)) continue;
      for (Node c = 0; c < n; ++c) {
        if (l.leq(c, b) || l.leq(b, c) || l.leq(a, c) || l.leq(c, a)) continue;
        if (l.join(a, c) == l.join(b, c) && l.meet(a, c) == l.meet(b, c)) {
          r.witness = {l.meet(a, c), a, b, c, l.join(a, c)};
          r.witness_kind = "N5";
          break;
        }
      }
    }
  r.modular = !r.witness;
  if (r.modular) {
    for (Node a = 0; a < n && !r.witness; ++a)
      for (Node b = a + 1; b < n && !r.witness; ++b)
        for (Node c = b + 1; c < n; ++c) {
          if (l.leq(a, b) || l.leq(b, a) || l.leq(a, c) || l.leq(c, a) || l.leq(b, c) || l.leq(c, b)) continue;
          Node j = l.join(a, b), m = l.meet(a, b);
          if (l.join(a, c) == j && l.join(b, c) == j && l.meet(a, c) == m && l.meet(b, c) == m) {
            r.witness = {m, a, b, c, j};
            r.witness_kind = "M3";
            break;
          }
        }
  }
  r.distributive = !r.witness;
  return r;
}

SubdirectReport neutral_subdirect_check(const FiniteLattice& l, Node x) {
  auto prof = special_profile(l, x);
  if (!prof.has(Special::Neutral)) {
    auto [y, z] = *prof.witness(Special::Neutral);
    throw Error("element " + l.label(x) + " is not neutral (witness y=" + l.label(y) + ", z=" + l.label(z) + ")");
  }
  SubdirectReport r;
  const int n = l.size();
  auto img = [&](Node y) { return std::pair{l.meet(y, x), l.join(y, x)}; };
  auto fail = [&](std::string m) {
    r.ok = false;
    r.violations.push_back(std::move(m));
  };
  for (Node y = 0; y < n; ++y)
    for (Node z = 0; z < n; ++z) {
      auto fy = img(y), fz = img(z);
      if (y < z && fy == fz) fail("not injective: " + l.label(y) + ", " + l.label(z));
      auto m = img(l.meet(y, z));
      if (m != std::pair{l.meet(fy.first, fz.first), l.meet(fy.second, fz.second)})
        fail("meet not preserved at " + l.label(y) + ", " + l.label(z));
      auto j = img(l.join(y, z));
      if (j != std::pair{l.join(fy.first, fz.first), l.join(fy.second, fz.second)})
        fail("join not preserved at " + l.label(y) + ", " + l.label(z));
    }
  for (Node y = 0; y < n; ++y) {
    if (l.leq(y, x) && img(y).first != y) fail("first projection misses " + l.label(y));
    if (l.leq(x, y) && img(y).second != y) fail("second projection misses " + l.label(y));
  }
  return r;
}

FiniteLattice chain(int n) {
  std::vector<std::pair<Node, Node>> c;
  for (int i = 0; i + 1 < n; ++i) c.emplace_back(i, i + 1);
  return FiniteLattice::from_covers(n, c);
}

FiniteLattice boolean_square() {
  return FiniteLattice::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {"0", "a", "b", "1"});
}

FiniteLattice lattice_n5() {
  return FiniteLattice::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}, {"0", "a", "b", "c", "1"});
}

FiniteLattice lattice_m3() {
  return FiniteLattice::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, {"0", "a", "b", "c", "1"});
}

} // namespace epilat

#include "epilat/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace epilat {

std::string canonical_form(const FiniteLattice& l) {
  const int n = l.size();
  std::vector<Node> middle;
  for (Node a = 0; a < n; ++a)
    if (a != l.bottom() && a != l.top()) middle.push_back(a);
  std::sort(middle.begin(), middle.end());
  std::string best;
  do {
    std::vector<Node> order;
    order.push_back(l.bottom());
    order.insert(order.end(), middle.begin(), middle.end());
    if (n > 1) order.push_back(l.top());
    std::string s;
    for (Node a : order)
      for (Node b : order) s += l.leq(a, b) ? '1' : '0';
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(middle.begin(), middle.end()));
  return best;
}

std::vector<FiniteLattice> enumerate_lattices(int n) {
  if (n < 1 || n > 7) throw Error("enumerate_lattices: n must be in 1..7");
  if (n == 1) return {FiniteLattice::from_leq({{true}})};
  const int m = n - 2;
  // Strict orders on the middle elements where i < j is only possible for
  // indices i < j (every finite poset has such a natural labelling).
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  std::map<std::string, FiniteLattice> found;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) rel[pairs[k].first][pairs[k].second] = true;
    bool transitive = true;
    for (int i = 0; i < m && transitive; ++i)
      for (int j = 0; j < m && transitive; ++j)
        for (int k = 0; k < m && transitive; ++k)
          if (rel[i][j] && rel[j][k] && !rel[i][k]) transitive = false;
    if (!transitive) continue;
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a) {
      leq[0][a] = true;
      leq[a][n - 1] = true;
      leq[a][a] = true;
    }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (rel[i][j]) leq[i + 1][j + 1] = true;
    try {
      auto l = FiniteLattice::from_leq(leq);
      found.emplace(canonical_form(l), l);
    } catch (const Error&) {
      // not a lattice
    }
  }
  std::vector<FiniteLattice> out;
  for (auto& [key, l] : found) {
    // Rebuild in canonical labelling so node order is deterministic.
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) leq[i][j] = key[i * n + j] == '1';
    out.push_back(FiniteLattice::from_leq(leq));
  }
  return out;
}

bool isomorphic_labelled(const FiniteLattice& a, const FiniteLattice& b) {
  if (a.size() != b.size()) return false;
  std::map<std::string, Node> where;
  for (Node x = 0; x < b.size(); ++x)
    if (!where.emplace(b.label(x), x).second) throw Error("duplicate label '" + b.label(x) + "'");
  std::vector<Node> f(a.size());
  for (Node x = 0; x < a.size(); ++x) {
    auto it = where.find(a.label(x));
    if (it == where.end()) return false;
    f[x] = it->second;
  }
  for (Node x = 0; x < a.size(); ++x)
    for (Node y = 0; y < a.size(); ++y)
      if (a.leq(x, y) != b.leq(f[x], f[y])) return false;
  return true;
}

} // namespace epilat

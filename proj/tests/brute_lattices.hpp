#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

// Brute-force lattice enumeration that shares no code with the library:
// every strict order on the middle elements, kept when it is a lattice,
// deduplicated by the least adjacency string over all relabellings.
namespace brute {

using Order = std::vector<std::vector<bool>>; // non-strict, with bottom 0 and top n-1

inline bool is_lattice(const Order& le) {
  const int n = static_cast<int>(le.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int lubs = 0, glbs = 0;
      for (int c = 0; c < n; ++c) {
        if (le[a][c] && le[b][c]) {
          bool least = true;
          for (int d = 0; d < n; ++d)
            if (le[a][d] && le[b][d] && !le[c][d]) least = false;
          lubs += least;
        }
        if (le[c][a] && le[c][b]) {
          bool greatest = true;
          for (int d = 0; d < n; ++d)
            if (le[d][a] && le[d][b] && !le[d][c]) greatest = false;
          glbs += greatest;
        }
      }
      if (lubs != 1 || glbs != 1) return false;
    }
  return true;
}

inline std::vector<Order> lattices(int n) {
  std::vector<Order> out;
  if (n == 1) return {Order{{true}}};
  const int m = n - 2;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::set<std::vector<bool>> seen;
  for (unsigned long mask = 0; mask < (1UL << pairs.size()); ++mask) {
    std::vector<std::vector<bool>> lt(m, std::vector<bool>(m, false));
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) lt[pairs[k].first][pairs[k].second] = true;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = 0; j < m && ok; ++j) {
        if (lt[i][j] && lt[j][i]) ok = false;
        for (int k = 0; k < m && ok; ++k)
          if (lt[i][j] && lt[j][k] && !lt[i][k]) ok = false;
      }
    if (!ok) continue;
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    std::vector<bool> best;
    do {
      std::vector<bool> s;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) s.push_back(lt[p[i]][p[j]]);
      if (best.empty() || s < best) best = s;
    } while (std::next_permutation(p.begin(), p.end()));
    if (!seen.insert(best).second) continue;
    Order le(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) le[0][i] = le[i][n - 1] = le[i][i] = true;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (lt[i][j]) le[i + 1][j + 1] = true;
    if (is_lattice(le)) out.push_back(le);
  }
  return out;
}

} // namespace brute

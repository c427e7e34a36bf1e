#pragma once

// Independent brute-force oracles used only by tests. Everything here avoids
// the library's algorithmic paths on purpose: matching by subset recursion,
// isomorphism by permutation backtracking.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "specfc/graph.hpp"

namespace oracle {

// Maximum matching size by recursion over the lowest available vertex,
// memoized on the set of available vertices. Fine up to ~16 vertices.
inline int max_matching_size(const specfc::Graph& g) {
  const int n = g.order();
  std::vector<signed char> memo(std::size_t{1} << n, -1);
  const auto rec = [&](auto&& self, std::uint32_t avail) -> int {
    if (avail == 0) return 0;
    if (memo[avail] >= 0) return memo[avail];
    int v = 0;
    while (!((avail >> v) & 1)) ++v;
    const std::uint32_t rest = avail & ~(std::uint32_t{1} << v);
    int best = self(self, rest);  // leave v unmatched
    for (int w : g.neighbors(v))
      if ((rest >> w) & 1)
        best = std::max(best, 1 + self(self, rest & ~(std::uint32_t{1} << w)));
    memo[avail] = static_cast<signed char>(best);
    return best;
  };
  return rec(rec, (std::uint32_t{1} << n) - 1);
}

inline specfc::Graph relabel(const specfc::Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges().size());
  for (auto [u, v] : g.edges())
    edges.emplace_back(perm[u], perm[v]);
  return specfc::Graph(g.order(), edges);
}

// Permutation backtracking with degree pruning; intended for n <= 10.
inline bool isomorphic(const specfc::Graph& a, const specfc::Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::vector<int> sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  const auto place = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      if (da[v] != db[w]) continue;
      bool ok = true;
      for (int prev = 0; prev < v && ok; ++prev)
        if (a.has_edge(prev, v) != b.has_edge(image[prev], w)) ok = false;
      if (!ok) continue;
      image[v] = w;
      used[w] = true;
      if (self(self, v + 1)) return true;
      used[w] = false;
      image[v] = -1;
    }
    return false;
  };
  return place(place, 0);
}

}  // namespace oracle

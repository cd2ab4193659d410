// Test-only oracle for mutual visibility, kept independent of the library
// checkers: Floyd-Warshall distances plus explicit geodesic enumeration.
#ifndef MV_TESTS_ORACLE_HPP
#define MV_TESTS_ORACLE_HPP

#include <vector>

#include "mv/graph.hpp"
#include "mv/visibility.hpp"

namespace mv_oracle {

inline std::vector<std::vector<int>> fw_distances(const mv::Graph& g) {
  const int n = g.size();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n), inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// True iff some shortest (u,v)-path has all internal vertices outside S.
inline bool geodesic_avoiding(const mv::Graph& g,
                              const std::vector<std::vector<int>>& dist,
                              int u, int v, mv::Bits S) {
  if (dist[u][v] <= 1) return true;
  bool found = false;
  mv::for_each_bit(g.neighbors(u), [&](int w) {
    if (found) return;
    if (dist[w][v] != dist[u][v] - 1) return;
    if (w != v && (S & mv::bit(w))) return;
    if (geodesic_avoiding(g, dist, w, v, S)) found = true;
  });
  return found;
}

inline bool is_mv(const mv::Graph& g, mv::Bits S) {
  auto dist = fw_distances(g);
  std::vector<int> members;
  mv::for_each_bit(S, [&](int v) { members.push_back(v); });
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!geodesic_avoiding(g, dist, members[i], members[j], S)) return false;
  return true;
}

// Exhaustive polynomial over all 2^n subsets; only for small graphs.
inline std::vector<std::uint64_t> polynomial(const mv::Graph& g) {
  std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(g.size()) + 1, 0);
  for (mv::Bits S = 0; S < (mv::Bits{1} << g.size()); ++S)
    if (is_mv(g, S)) ++coeffs[static_cast<std::size_t>(mv::popcount(S))];
  return coeffs;
}

}  // namespace mv_oracle

#endif

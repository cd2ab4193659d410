#ifndef MV_PROFILE_HPP
#define MV_PROFILE_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "mv/graph.hpp"

namespace mv {

struct SrgParams {
  int n = 0;
  int d = 0;
  int lambda = 0;
  int mu = 0;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Exact structural invariants of a graph. `diameter` is empty for
/// disconnected graphs, `girth` is empty for forests.
struct GraphProfile {
  int n = 0;
  bool connected = false;
  bool is_regular = false;
  int degree = 0;  // common degree when regular, otherwise the max degree
  std::optional<int> diameter;
  std::optional<int> girth;
  bool triangle_free = false;
  std::optional<SrgParams> srg;
  bool unique_common_neighbour = false;
  bool lemma4_class = false;  // triangle-free + unique common neighbour
  bool is_moore_diam2 = false;
};

/// Single-source BFS distances; -1 marks unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.size()), -1);
  dist[static_cast<std::size_t>(source)] = 0;
  Bits seen = bit(source);
  Bits frontier = bit(source);
  int d = 0;
  while (frontier) {
    ++d;
    Bits next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= ~seen;
    for_each_bit(next, [&](int v) { dist[static_cast<std::size_t>(v)] = d; });
    seen |= next;
    frontier = next;
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

namespace detail {

// Shortest cycle through BFS non-tree edges; exact when minimized over
// all roots.
inline std::optional<int> girth(const Graph& g) {
  int best = -1;
  for (int root = 0; root < g.size(); ++root) {
    std::vector<int> dist(static_cast<std::size_t>(g.size()), -1);
    std::vector<int> parent(static_cast<std::size_t>(g.size()), -1);
    std::vector<int> queue{root};
    dist[static_cast<std::size_t>(root)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for_each_bit(g.neighbors(u), [&](int v) {
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(v)] = u;
          queue.push_back(v);
        } else if (v != parent[static_cast<std::size_t>(u)]) {
          int len = dist[static_cast<std::size_t>(u)] +
                    dist[static_cast<std::size_t>(v)] + 1;
          if (best < 0 || len < best) best = len;
        }
      });
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

}  // namespace detail

inline GraphProfile profile(const Graph& g) {
  GraphProfile p;
  p.n = g.size();

  int min_deg = g.size(), max_deg = 0;
  for (int v = 0; v < g.size(); ++v) {
    min_deg = std::min(min_deg, g.degree(v));
    max_deg = std::max(max_deg, g.degree(v));
  }
  p.is_regular = (min_deg == max_deg);
  p.degree = max_deg;

  int diameter = 0;
  bool connected = true;
  for (int v = 0; v < g.size() && connected; ++v) {
    auto dist = bfs_distances(g, v);
    for (int d : dist) {
      if (d < 0) connected = false;
      diameter = std::max(diameter, d);
    }
  }
  p.connected = connected;
  if (connected) p.diameter = diameter;

  p.girth = detail::girth(g);
  p.triangle_free = !(p.girth && *p.girth == 3);

  bool lambda_ok = true, mu_ok = true, ucn = true;
  int lambda = -1, mu = -1;
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v) {
      int common = popcount(g.neighbors(u) & g.neighbors(v));
      if (g.adjacent(u, v)) {
        if (lambda < 0) lambda = common;
        if (common != lambda) lambda_ok = false;
      } else {
        if (mu < 0) mu = common;
        if (common != mu) mu_ok = false;
        if (common != 1) ucn = false;
      }
    }
  p.unique_common_neighbour = ucn;  // vacuously true for complete graphs
  if (p.is_regular && lambda_ok && mu_ok && lambda >= 0 && mu >= 0)
    p.srg = SrgParams{p.n, p.degree, lambda, mu};
  p.lemma4_class = p.triangle_free && p.unique_common_neighbour;
  p.is_moore_diam2 = p.is_regular && p.diameter == 2 &&
                     p.n == p.degree * p.degree + 1;
  return p;
}

}  // namespace mv

#endif

#ifndef MV_VISIBILITY_HPP
#define MV_VISIBILITY_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mv/graph.hpp"
#include "mv/profile.hpp"

namespace mv {

/// A vertex subset of an associated graph, as a bitmask.
struct VertexSet {
  Bits mask = 0;

  int size() const { return popcount(mask); }

  bool contains(int v) const { return (mask & bit(v)) != 0; }

  /// Parses comma-separated ascending 0-based indices, e.g. "0,2,12".
  /// The empty string is the empty set.
  static VertexSet parse(const std::string& text, int n) {
    VertexSet s;
    if (text.empty()) return s;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      int v = -1;
      try {
        std::size_t used = 0;
        v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw parse_error("bad vertex index `" + item + "`");
      }
      if (v < 0 || v >= n)
        throw argument_error("vertex " + std::to_string(v) + " out of range");
      s.mask |= bit(v);
    }
    return s;
  }

  std::string to_string() const {
    std::string out;
    for_each_bit(mask, [&](int v) {
      if (!out.empty()) out += ',';
      out += std::to_string(v);
    });
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

/// Per-subset statistics of G[S] and the cut to T = V \ S.
struct SetAnalysis {
  int s = 0;
  int edges_inside = 0;    // e(S)
  int edges_crossing = 0;  // e(S, T)
  std::map<int, int> k_histogram;  // k -> #{t in T : |N(t) ∩ S| = k}
  int induced_max_degree = 0;
  std::vector<std::pair<int, int>> matching_edges;  // K2 components of G[S]
  int isolated_count = 0;
};

inline SetAnalysis analyze_set(const Graph& g, VertexSet S) {
  SetAnalysis a;
  a.s = S.size();
  for_each_bit(S.mask, [&](int v) {
    Bits in = g.neighbors(v) & S.mask;
    int deg = popcount(in);
    a.edges_inside += deg;  // halved below
    a.edges_crossing += g.degree(v) - deg;
    a.induced_max_degree = std::max(a.induced_max_degree, deg);
    if (deg == 0) ++a.isolated_count;
    if (deg == 1) {
      int u = lowest_bit(in);
      if (v < u && popcount(g.neighbors(u) & S.mask) == 1)
        a.matching_edges.emplace_back(v, u);
    }
  });
  a.edges_inside /= 2;
  for_each_bit(g.vertex_mask() & ~S.mask, [&](int t) {
    ++a.k_histogram[popcount(g.neighbors(t) & S.mask)];
  });
  return a;
}

namespace detail {

// Unchecked checker cores; the public functions validate preconditions.

inline bool mv_lemma4(const Graph& g, Bits S) {
  bool ok = true;
  for_each_bit(S, [&](int v) {
    if (popcount(g.neighbors(v) & S) > 1) ok = false;
  });
  return ok;
}

inline bool mv_diam2(const Graph& g, Bits S) {
  Bits outside = g.vertex_mask() & ~S;
  bool ok = true;
  for_each_bit(S, [&](int u) {
    Bits rest = S & ~full_mask(u + 1);
    for_each_bit(rest & ~g.neighbors(u), [&](int v) {
      if ((g.neighbors(u) & g.neighbors(v) & outside) == 0) ok = false;
    });
  });
  return ok;
}

// BFS distance from `source` to `target` inside the subgraph on
// `allowed` (which must contain both); -1 if unreachable.
inline int restricted_distance(const Graph& g, int source, int target,
                               Bits allowed) {
  if (source == target) return 0;
  Bits seen = bit(source);
  Bits frontier = bit(source);
  int d = 0;
  while (frontier) {
    ++d;
    Bits next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= allowed & ~seen;
    if (next & bit(target)) return d;
    seen |= next;
    frontier = next;
  }
  return -1;
}

inline bool mv_general(const Graph& g, Bits S) {
  std::vector<int> members;
  for_each_bit(S, [&](int v) { members.push_back(v); });
  for (std::size_t i = 0; i < members.size(); ++i) {
    auto dist = bfs_distances(g, members[i]);
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      int u = members[i], v = members[j];
      Bits allowed = g.vertex_mask() & ~(S & ~(bit(u) | bit(v)));
      if (restricted_distance(g, u, v, allowed) !=
          dist[static_cast<std::size_t>(v)])
        return false;
    }
  }
  return true;
}

}  // namespace detail

/// True iff every pair in S has a geodesic whose internal vertices avoid S.
inline bool is_mv_set_general(const Graph& g, VertexSet S) {
  if (!is_connected(g))
    throw precondition_error("is_mv_set_general requires a connected graph");
  return detail::mv_general(g, S.mask);
}

/// Diameter-2 characterization: every non-adjacent pair in S has a common
/// neighbour outside S.
inline bool is_mv_set_diam2(const Graph& g, VertexSet S) {
  auto p = profile(g);
  if (!p.diameter || *p.diameter > 2)
    throw precondition_error("is_mv_set_diam2 requires diameter <= 2");
  return detail::mv_diam2(g, S.mask);
}

/// Characterization on triangle-free unique-common-neighbour graphs:
/// S is a mutual-visibility set iff G[S] has maximum degree at most 1.
inline bool is_mv_set_lemma4(const Graph& g, VertexSet S) {
  if (!profile(g).lemma4_class)
    throw precondition_error(
        "is_mv_set_lemma4 requires a triangle-free graph whose non-adjacent "
        "pairs have unique common neighbours");
  return detail::mv_lemma4(g, S.mask);
}

enum class CheckerKind { lemma4, diam2, general };

inline CheckerKind select_checker(const GraphProfile& p) {
  if (p.lemma4_class) return CheckerKind::lemma4;
  if (p.diameter && *p.diameter <= 2) return CheckerKind::diam2;
  return CheckerKind::general;
}

inline const char* checker_name(CheckerKind k) {
  switch (k) {
    case CheckerKind::lemma4: return "lemma4";
    case CheckerKind::diam2: return "diam2";
    default: return "general";
  }
}

namespace detail {

inline bool mv_check(const Graph& g, Bits S, CheckerKind kind) {
  switch (kind) {
    case CheckerKind::lemma4: return mv_lemma4(g, S);
    case CheckerKind::diam2: return mv_diam2(g, S);
    default: return mv_general(g, S);
  }
}

template <typename F>
void mv_dfs(const Graph& g, CheckerKind kind, Bits S, int start, F& visit) {
  visit(S);
  for (int v = start; v < g.size(); ++v) {
    Bits ext = S | bit(v);
    if (mv_check(g, ext, kind)) mv_dfs(g, kind, ext, v + 1, visit);
  }
}

}  // namespace detail

inline constexpr int kEnumerationGuard = 30;

/// Calls `visit` once for each mutual-visibility set of g (including the
/// empty set). Extension is by ascending vertex index, pruned by the
/// hereditary property, so every set is visited exactly once.
template <typename F>
void for_each_mv_set(const Graph& g, F visit, bool force = false) {
  if (!is_connected(g))
    throw precondition_error("enumeration requires a connected graph");
  if (g.size() > kEnumerationGuard && !force)
    throw guard_error("graph has more than 30 vertices; pass force=true "
                      "(CLI: --force) to enumerate anyway");
  CheckerKind kind = select_checker(profile(g));
  detail::mv_dfs(g, kind, 0, 0, visit);
}

/// Coefficients r_0..r_n: r_i counts the mutual-visibility sets of size i.
struct VisibilityPolynomial {
  std::vector<std::uint64_t> coefficients;

  int degree() const {
    for (int i = static_cast<int>(coefficients.size()) - 1; i >= 0; --i)
      if (coefficients[static_cast<std::size_t>(i)] != 0) return i;
    return 0;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      std::uint64_t c = coefficients[i];
      if (c == 0) continue;
      if (!out.empty()) out += " + ";
      if (c != 1 || i == 0) out += std::to_string(c);
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const VisibilityPolynomial&,
                         const VisibilityPolynomial&) = default;
};

inline VisibilityPolynomial visibility_polynomial(const Graph& g,
                                                  bool force = false) {
  VisibilityPolynomial poly;
  poly.coefficients.assign(static_cast<std::size_t>(g.size()) + 1, 0);
  for_each_mv_set(
      g,
      [&](Bits S) { ++poly.coefficients[static_cast<std::size_t>(popcount(S))]; },
      force);
  return poly;
}

inline std::uint64_t count_mv_sets_of_size(const Graph& g, int k,
                                           bool force = false) {
  if (k < 0) throw argument_error("set size must be non-negative");
  if (k > g.size()) return 0;
  return visibility_polynomial(g, force).coefficients[static_cast<std::size_t>(k)];
}

}  // namespace mv

#endif

#ifndef MV_GRAPH_HPP
#define MV_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mv {

// Vertex subsets are single machine words; graphs are capped at 64 vertices.
using Bits = std::uint64_t;

inline constexpr int kMaxVertices = 64;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct size_error : error { using error::error; };
struct argument_error : error { using error::error; };
struct precondition_error : error { using error::error; };
struct parse_error : error { using error::error; };
struct construction_error : error { using error::error; };
struct verification_error : error { using error::error; };
struct guard_error : error { using error::error; };
struct range_error : error { using error::error; };
struct io_error : error { using error::error; };

constexpr Bits bit(int v) { return Bits{1} << v; }

constexpr Bits full_mask(int n) {
  return n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1;
}

inline int popcount(Bits b) { return std::popcount(b); }

inline int lowest_bit(Bits b) { return std::countr_zero(b); }

template <typename F>
void for_each_bit(Bits b, F&& f) {
  while (b) {
    f(std::countr_zero(b));
    b &= b - 1;
  }
}

/// Immutable simple graph on at most 64 vertices, one adjacency bit-row
/// per vertex. Builders construct and then treat the object as read-only.
class Graph {
 public:
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 1 || n > kMaxVertices)
      throw size_error("vertex count must be in [1, 64], got " +
                       std::to_string(n));
  }

  int size() const { return n_; }

  Bits neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0;
  }

  int degree(int v) const { return popcount(neighbors(v)); }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
  }

  Bits vertex_mask() const { return full_mask(n_); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw argument_error("self-loops are not allowed");
    adj_[static_cast<std::size_t>(u)] |= bit(v);
    adj_[static_cast<std::size_t>(v)] |= bit(u);
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for_each_bit(adj_[static_cast<std::size_t>(u)] & ~full_mask(u + 1),
                   [&](int v) { out.emplace_back(u, v); });
    return out;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw argument_error("vertex " + std::to_string(v) + " out of range");
  }

  int n_;
  std::vector<Bits> adj_;
};

/// N(u) ∩ N(v) as a bitmask.
inline Bits common_neighbors(const Graph& g, int u, int v) {
  if (u == v) throw argument_error("common_neighbors requires u != v");
  return g.neighbors(u) & g.neighbors(v);
}

inline Graph build_cycle(int n) {
  if (n < 3 || n > kMaxVertices)
    throw size_error("cycle length must be in [3, 64], got " +
                     std::to_string(n));
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph build_complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// Petersen graph. Vertices are the 2-element subsets of {1..5} in
/// lexicographic order: 12,13,14,15,23,24,25,34,35,45 (indices 0..9).
/// Two vertices are adjacent iff the subsets are disjoint.
inline Graph build_petersen() {
  std::vector<std::pair<int, int>> labels;
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) labels.emplace_back(a, b);
  Graph g(10);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      auto [a, b] = labels[static_cast<std::size_t>(i)];
      auto [c, d] = labels[static_cast<std::size_t>(j)];
      if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
    }
  return g;
}

/// Hoffman-Singleton graph, 50 vertices. Five pentagons P_0..P_4
/// (indices 5h+j, j adjacent to j±1 mod 5) and five pentagrams Q_0..Q_4
/// (indices 25+5i+j, j adjacent to j±2 mod 5); vertex j of P_h is joined
/// to vertex (h*i + j) mod 5 of Q_i. The construction is validated
/// against the srg(50,7,0,1) profile, which pins the graph up to
/// isomorphism.
inline Graph build_hoffman_singleton() {
  Graph g(50);
  auto pent = [](int h, int j) { return 5 * h + j; };
  auto star = [](int i, int j) { return 25 + 5 * i + j; };
  for (int h = 0; h < 5; ++h)
    for (int j = 0; j < 5; ++j) {
      g.add_edge(pent(h, j), pent(h, (j + 1) % 5));
      g.add_edge(star(h, j), star(h, (j + 2) % 5));
    }
  for (int h = 0; h < 5; ++h)
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        g.add_edge(pent(h, j), star(i, (h * i + j) % 5));

  for (int v = 0; v < 50; ++v)
    if (g.degree(v) != 7)
      throw construction_error("Hoffman-Singleton builder: vertex degree != 7");
  for (int u = 0; u < 50; ++u)
    for (int v = u + 1; v < 50; ++v) {
      int common = popcount(g.neighbors(u) & g.neighbors(v));
      int want = g.adjacent(u, v) ? 0 : 1;
      if (common != want)
        throw construction_error(
            "Hoffman-Singleton builder: srg(50,7,0,1) violated at pair (" +
            std::to_string(u) + "," + std::to_string(v) + ")");
    }
  return g;
}

inline Graph build_complement(const Graph& g) {
  Graph out(g.size());
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

/// Line graph; vertices are the edges of g in lexicographic order.
inline Graph build_line_graph(const Graph& g) {
  auto e = g.edges();
  if (e.size() > static_cast<std::size_t>(kMaxVertices))
    throw size_error("line graph needs <= 64 edges, got " +
                     std::to_string(e.size()));
  if (e.empty()) throw size_error("line graph of an edgeless graph is empty");
  Graph out(static_cast<int>(e.size()));
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      auto [a, b] = e[i];
      auto [c, d] = e[j];
      if (a == c || a == d || b == c || b == d)
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return out;
}

inline Graph build_disjoint_union(const Graph& g1, const Graph& g2) {
  if (g1.size() + g2.size() > kMaxVertices)
    throw size_error("disjoint union exceeds 64 vertices");
  Graph out(g1.size() + g2.size());
  for (auto [u, v] : g1.edges()) out.add_edge(u, v);
  for (auto [u, v] : g2.edges()) out.add_edge(u + g1.size(), v + g1.size());
  return out;
}

// --- edge-list text format ---
// Lines `u v` with 0-based endpoints; `#` starts a comment; an optional
// first non-comment line `n=<k>` forces the vertex count, otherwise
// n = 1 + max label. Duplicate edges and self-loops are parse errors.

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  int forced_n = -1;
  bool saw_content = false;
  std::vector<std::pair<int, int>> edges;
  int max_label = -1;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::string body = line.substr(pos);
    if (!saw_content && body.rfind("n=", 0) == 0) {
      saw_content = true;
      try {
        forced_n = std::stoi(body.substr(2));
      } catch (const std::exception&) {
        throw parse_error("line " + std::to_string(line_no) +
                          ": bad vertex count");
      }
      if (forced_n < 1 || forced_n > kMaxVertices)
        throw parse_error("line " + std::to_string(line_no) +
                          ": vertex count out of range");
      continue;
    }
    saw_content = true;
    std::istringstream ss(body);
    int u = -1, v = -1;
    std::string extra;
    if (!(ss >> u >> v) || (ss >> extra))
      throw parse_error("line " + std::to_string(line_no) +
                        ": expected `u v`");
    if (u < 0 || v < 0 || u >= kMaxVertices || v >= kMaxVertices)
      throw parse_error("line " + std::to_string(line_no) +
                        ": endpoint out of range");
    if (u == v)
      throw parse_error("line " + std::to_string(line_no) + ": self-loop");
    for (auto [a, b] : edges)
      if ((a == u && b == v) || (a == v && b == u))
        throw parse_error("line " + std::to_string(line_no) +
                          ": duplicate edge");
    edges.emplace_back(u, v);
    max_label = std::max({max_label, u, v});
  }
  int n = forced_n >= 0 ? forced_n : max_label + 1;
  if (n < 1) throw parse_error("no vertices");
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw parse_error("edge " + std::to_string(u) + " " + std::to_string(v) +
                        " exceeds forced vertex count");
    g.add_edge(u, v);
  }
  return g;
}

inline void write_edge_list(const Graph& g, std::ostream& out) {
  out << "n=" << g.size() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace mv

#endif

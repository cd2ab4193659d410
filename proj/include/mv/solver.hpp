#ifndef MV_SOLVER_HPP
#define MV_SOLVER_HPP

#include <cctype>
#include <chrono>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mv/graph.hpp"
#include "mv/profile.hpp"
#include "mv/visibility.hpp"

namespace mv {

enum class SolveMethod { branch_and_bound, exhaustive };

struct SolveResult {
  int optimum = 0;
  VertexSet certificate;
  std::vector<std::pair<int, int>> certificate_edges;  // matching problems
  std::uint64_t nodes_explored = 0;
  double elapsed_ms = 0.0;
  SolveMethod method = SolveMethod::branch_and_bound;
  bool proven = true;  // false when a node/time limit was hit
};

struct SolveOptions {
  std::uint64_t node_limit = 0;  // 0 = unlimited
  double time_limit_ms = 0.0;    // 0 = unlimited
  bool canonical = false;  // keep searching for the lexicographically
                           // smallest optimum certificate
};

namespace detail {

// {0,1,3} < {0,2,...}: the set owning the lowest differing vertex wins.
inline bool lex_less(Bits a, Bits b) {
  Bits diff = a ^ b;
  if (diff == 0) return false;
  return (a & bit(lowest_bit(diff))) != 0;
}

class SearchClock {
 public:
  explicit SearchClock(const SolveOptions& opts)
      : opts_(opts), start_(std::chrono::steady_clock::now()) {}

  // Returns true once a limit is breached; the check is cheap enough to
  // run per node.
  bool expired(std::uint64_t nodes) {
    if (hit_) return true;
    if (opts_.node_limit && nodes >= opts_.node_limit) hit_ = true;
    if (opts_.time_limit_ms > 0 && (nodes & 0x3ff) == 0 &&
        elapsed_ms() >= opts_.time_limit_ms)
      hit_ = true;
    return hit_;
  }

  bool hit() const { return hit_; }

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  SolveOptions opts_;
  bool hit_ = false;
  std::chrono::steady_clock::time_point start_;
};

// Branch-and-bound for the largest S with Δ(G[S]) <= 1. Invariant: every
// undecided vertex can individually join `included`.
class DissociationSearch {
 public:
  DissociationSearch(const Graph& g, const SolveOptions& opts)
      : g_(g), opts_(opts), clock_(opts) {}

  SolveResult run() {
    seed_greedy();
    search(0, g_.vertex_mask());
    SolveResult r;
    r.optimum = best_size_;
    r.certificate.mask = best_set_;
    r.nodes_explored = nodes_;
    r.elapsed_ms = clock_.elapsed_ms();
    r.method = SolveMethod::branch_and_bound;
    r.proven = !clock_.hit();
    return r;
  }

 private:
  bool addable(int v, Bits included) const {
    Bits in = g_.neighbors(v) & included;
    if (popcount(in) > 1) return false;
    if (in && (g_.neighbors(lowest_bit(in)) & included)) return false;
    return true;
  }

  void seed_greedy() {
    Bits included = 0;
    for (int v = 0; v < g_.size(); ++v)
      if (addable(v, included)) included |= bit(v);
    best_size_ = popcount(included);
    best_set_ = included;
  }

  void record(Bits included) {
    int size = popcount(included);
    if (size > best_size_ ||
        (opts_.canonical && size == best_size_ && lex_less(included, best_set_))) {
      best_size_ = size;
      best_set_ = included;
    }
  }

  void search(Bits included, Bits undecided) {
    ++nodes_;
    if (clock_.expired(nodes_)) return;
    record(included);
    if (!undecided) return;
    int bound = popcount(included) + popcount(undecided);
    if (opts_.canonical ? bound < best_size_ : bound <= best_size_) return;

    // Branch on the undecided vertex of highest residual degree,
    // lowest index on ties; include first.
    int branch = -1, branch_deg = -1;
    for_each_bit(undecided, [&](int v) {
      int deg = popcount(g_.neighbors(v) & undecided);
      if (deg > branch_deg) {
        branch_deg = deg;
        branch = v;
      }
    });

    Bits inc = included | bit(branch);
    Bits und = undecided & ~bit(branch);
    Bits partner_adj = 0;
    Bits in = g_.neighbors(branch) & inc;
    if (in) partner_adj = g_.neighbors(lowest_bit(in));
    Bits affected = und & (g_.neighbors(branch) | partner_adj);
    Bits pruned = und;
    for_each_bit(affected, [&](int w) {
      if (!addable(w, inc)) pruned &= ~bit(w);
    });
    search(inc, pruned);
    search(included, undecided & ~bit(branch));
  }

  const Graph& g_;
  SolveOptions opts_;
  SearchClock clock_;
  std::uint64_t nodes_ = 0;
  int best_size_ = 0;
  Bits best_set_ = 0;
};

// Hereditary subset search with an explicit mutual-visibility oracle; used
// off the lemma4 class where no degree characterization is available.
class HereditarySearch {
 public:
  HereditarySearch(const Graph& g, CheckerKind kind, const SolveOptions& opts)
      : g_(g), kind_(kind), opts_(opts), clock_(opts) {}

  SolveResult run() {
    dfs(0, 0);
    SolveResult r;
    r.optimum = best_size_;
    r.certificate.mask = best_set_;
    r.nodes_explored = nodes_;
    r.elapsed_ms = clock_.elapsed_ms();
    r.method = SolveMethod::exhaustive;
    r.proven = !clock_.hit();
    return r;
  }

 private:
  void dfs(Bits S, int start) {
    ++nodes_;
    if (clock_.expired(nodes_)) return;
    int size = popcount(S);
    if (size > best_size_ ||
        (opts_.canonical && size == best_size_ && lex_less(S, best_set_))) {
      best_size_ = size;
      best_set_ = S;
    }
    for (int v = start; v < g_.size(); ++v) {
      int bound = size + g_.size() - v;
      if (opts_.canonical ? bound < best_size_ : bound <= best_size_) break;
      Bits ext = S | bit(v);
      if (detail::mv_check(g_, ext, kind_)) dfs(ext, v + 1);
    }
  }

  const Graph& g_;
  CheckerKind kind_;
  SolveOptions opts_;
  SearchClock clock_;
  std::uint64_t nodes_ = 0;
  int best_size_ = 0;
  Bits best_set_ = 0;
};

}  // namespace detail

/// Maximum dissociation set: largest S with Δ(G[S]) <= 1. Equals μ(G) on
/// the lemma4 class.
inline SolveResult max_dissociation(const Graph& g,
                                    const SolveOptions& opts = {}) {
  return detail::DissociationSearch(g, opts).run();
}

/// Exact mutual-visibility number with certificate.
inline SolveResult mu_exact(const Graph& g, const SolveOptions& opts = {}) {
  auto p = profile(g);
  if (!p.connected)
    throw precondition_error("mu_exact requires a connected graph");
  if (p.lemma4_class) return max_dissociation(g, opts);
  return detail::HereditarySearch(g, select_checker(p), opts).run();
}

namespace detail {

// Shared skeleton over lexicographically ordered edges: an edge can join
// the matching iff its closed neighbourhood avoids every chosen endpoint.
class InducedMatchingSearch {
 public:
  InducedMatchingSearch(const Graph& g, const SolveOptions& opts)
      : g_(g), opts_(opts), clock_(opts), edges_(g.edges()) {
    for (auto [u, v] : edges_)
      closed_.push_back(bit(u) | bit(v) | g.neighbors(u) | g.neighbors(v));
  }

  SolveResult maximize() {
    chosen_.clear();
    dfs_max(0, 0, 0);
    SolveResult r;
    r.optimum = best_;
    r.certificate_edges = best_edges_;
    for (auto [u, v] : best_edges_) r.certificate.mask |= bit(u) | bit(v);
    r.nodes_explored = nodes_;
    r.elapsed_ms = clock_.elapsed_ms();
    r.method = SolveMethod::branch_and_bound;
    r.proven = !clock_.hit();
    return r;
  }

  std::uint64_t count_exact(int k) {
    target_ = k;
    count_ = 0;
    dfs_count(0, 0, 0);
    return count_;
  }

 private:
  void dfs_max(Bits blocked, std::size_t start, int size) {
    ++nodes_;
    if (clock_.expired(nodes_)) return;
    if (size > best_ ||
        (opts_.canonical && size == best_ && better_certificate())) {
      best_ = size;
      best_edges_ = chosen_;
    }
    int bound = size + popcount(g_.vertex_mask() & ~blocked) / 2;
    if (opts_.canonical ? bound < best_ : bound <= best_) return;
    for (std::size_t i = start; i < edges_.size(); ++i) {
      if ((bit(edges_[i].first) | bit(edges_[i].second)) & blocked) continue;
      chosen_.push_back(edges_[i]);
      dfs_max(blocked | closed_[i], i + 1, size + 1);
      chosen_.pop_back();
    }
  }

  bool better_certificate() const {
    Bits cand = 0, incumbent = 0;
    for (auto [u, v] : chosen_) cand |= bit(u) | bit(v);
    for (auto [u, v] : best_edges_) incumbent |= bit(u) | bit(v);
    return lex_less(cand, incumbent);
  }

  void dfs_count(Bits blocked, std::size_t start, int size) {
    if (size == target_) {
      ++count_;
      return;
    }
    int avail = popcount(g_.vertex_mask() & ~blocked);
    if (size + avail / 2 < target_) return;
    for (std::size_t i = start; i < edges_.size(); ++i) {
      if ((bit(edges_[i].first) | bit(edges_[i].second)) & blocked) continue;
      dfs_count(blocked | closed_[i], i + 1, size + 1);
    }
  }

  const Graph& g_;
  SolveOptions opts_;
  SearchClock clock_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Bits> closed_;
  std::vector<std::pair<int, int>> chosen_;
  std::vector<std::pair<int, int>> best_edges_;
  std::uint64_t nodes_ = 0;
  std::uint64_t count_ = 0;
  int best_ = 0;
  int target_ = 0;
};

}  // namespace detail

/// Maximum k such that g has an induced k-matching; certificate is the
/// edge list.
inline SolveResult max_induced_matching(const Graph& g,
                                        const SolveOptions& opts = {}) {
  return detail::InducedMatchingSearch(g, opts).maximize();
}

/// Number of induced k-matchings (unordered edge sets).
inline std::uint64_t count_induced_k_matchings(const Graph& g, int k) {
  if (k < 1) throw argument_error("matching size must be >= 1");
  SolveOptions opts;
  return detail::InducedMatchingSearch(g, opts).count_exact(k);
}

/// Number of independent vertex sets of size k.
inline std::uint64_t count_independent_k_sets(const Graph& g, int k) {
  if (k < 0) throw argument_error("set size must be >= 0");
  std::uint64_t count = 0;
  // Candidates stay restricted to indices above the last pick, so each
  // set is counted once.
  auto dfs = [&](auto&& self, Bits cand, int size, int floor) -> void {
    if (size == k) {
      ++count;
      return;
    }
    for_each_bit(cand & ~full_mask(floor), [&](int v) {
      if (size + popcount(cand & ~full_mask(v)) < k) return;
      self(self, cand & ~g.neighbors(v), size + 1, v + 1);
    });
  };
  dfs(dfs, g.vertex_mask(), 0, 0);
  return count;
}

/// Checks a claimed certificate: size, the applicable mutual-visibility
/// characterization, and (for size-20 sets of srg(50,7,0,1) graphs) the
/// extremal structure e(S)=10 with every outside vertex seeing exactly 4
/// of S. Throws verification_error naming the violated condition.
inline SetAnalysis verify_certificate(const Graph& g, VertexSet S,
                                      int expected) {
  if (S.size() != expected)
    throw verification_error("certificate has size " +
                             std::to_string(S.size()) + ", expected " +
                             std::to_string(expected));
  auto p = profile(g);
  bool is_mv;
  if (p.lemma4_class)
    is_mv = detail::mv_lemma4(g, S.mask);
  else if (p.diameter && *p.diameter <= 2)
    is_mv = detail::mv_diam2(g, S.mask);
  else if (p.connected)
    is_mv = detail::mv_general(g, S.mask);
  else
    throw verification_error("graph is disconnected");
  if (!is_mv)
    throw verification_error("certificate is not a mutual-visibility set");
  SetAnalysis a = analyze_set(g, S);
  if (p.srg == SrgParams{50, 7, 0, 1} && expected == 20) {
    if (a.edges_inside != 10)
      throw verification_error("size-20 certificate has e(S) = " +
                               std::to_string(a.edges_inside) +
                               ", expected 10");
    for (auto [k, cnt] : a.k_histogram)
      if (k != 4 && cnt > 0)
        throw verification_error(
            "size-20 certificate: an outside vertex has " + std::to_string(k) +
            " neighbours in S, expected 4");
  }
  return a;
}

// --- zero-one model: maximize Σ x_v s.t. Σ_{u∈N(v)} x_u + deg(v)·x_v
// <= 1 + deg(v) for every v; feasible sets are exactly Δ(G[S]) <= 1. ---

struct IpConstraint {
  std::string name;
  std::vector<std::pair<int, int>> terms;  // (coefficient, variable index)
  int rhs = 0;
};

struct IpModel {
  int num_vars = 0;
  std::vector<IpConstraint> constraints;
};

inline IpModel build_ip_model(const Graph& g) {
  IpModel m;
  m.num_vars = g.size();
  for (int v = 0; v < g.size(); ++v) {
    IpConstraint c;
    c.name = "c" + std::to_string(v);
    for_each_bit(g.neighbors(v), [&](int u) { c.terms.emplace_back(1, u); });
    c.terms.emplace_back(g.degree(v), v);
    c.rhs = 1 + g.degree(v);
    m.constraints.push_back(std::move(c));
  }
  return m;
}

/// Writes the model in LP text format with a fixed layout: `Maximize`,
/// an `obj:` line, `Subject To`, one `c<v>:` line per vertex with terms
/// in their stored order, `Binary`, the variable list, `End`. Unit
/// coefficients are omitted; term separator is ` + `; single spaces
/// throughout.
inline void export_lp(const IpModel& m, std::ostream& out) {
  out << "Maximize\n obj:";
  for (int v = 0; v < m.num_vars; ++v)
    out << (v == 0 ? " " : " + ") << "x" << v;
  out << "\nSubject To\n";
  for (const auto& c : m.constraints) {
    out << " " << c.name << ":";
    bool first = true;
    for (auto [coeff, var] : c.terms) {
      out << (first ? " " : " + ");
      if (coeff != 1) out << coeff << " ";
      out << "x" << var;
      first = false;
    }
    out << " <= " << c.rhs << "\n";
  }
  out << "Binary\n";
  for (int v = 0; v < m.num_vars; ++v) out << (v == 0 ? " " : " ") << "x" << v;
  out << "\nEnd\n";
  if (!out) throw io_error("failed to write LP model");
}

inline std::string export_lp_string(const IpModel& m) {
  std::ostringstream ss;
  export_lp(m, ss);
  return ss.str();
}

namespace detail {

inline int parse_var_token(const std::string& tok) {
  if (tok.size() < 2 || tok[0] != 'x') return -1;
  for (std::size_t i = 1; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return -1;
  return std::stoi(tok.substr(1));
}

}  // namespace detail

/// Parses the LP layout written by export_lp (tolerant of extra
/// whitespace). Only the model family above is accepted.
inline IpModel parse_lp(std::istream& in) {
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  std::size_t i = 0;
  auto expect = [&](const std::string& word) {
    if (i >= tokens.size() || tokens[i] != word)
      throw parse_error("LP parse: expected `" + word + "`");
    ++i;
  };
  expect("Maximize");
  expect("obj:");
  IpModel m;
  while (i < tokens.size() && tokens[i] != "Subject") {
    if (tokens[i] == "+") {
      ++i;
      continue;
    }
    if (detail::parse_var_token(tokens[i]) < 0)
      throw parse_error("LP parse: bad objective term `" + tokens[i] + "`");
    ++i;
    ++m.num_vars;
  }
  expect("Subject");
  expect("To");
  while (i < tokens.size() && tokens[i] != "Binary") {
    IpConstraint c;
    if (tokens[i].empty() || tokens[i].back() != ':')
      throw parse_error("LP parse: expected constraint name, got `" +
                        tokens[i] + "`");
    c.name = tokens[i].substr(0, tokens[i].size() - 1);
    ++i;
    int pending_coeff = 1;
    bool have_coeff = false;
    while (i < tokens.size() && tokens[i] != "<=") {
      if (tokens[i] == "+") {
        ++i;
        continue;
      }
      int var = detail::parse_var_token(tokens[i]);
      if (var >= 0) {
        c.terms.emplace_back(have_coeff ? pending_coeff : 1, var);
        have_coeff = false;
      } else {
        try {
          pending_coeff = std::stoi(tokens[i]);
        } catch (const std::exception&) {
          throw parse_error("LP parse: bad token `" + tokens[i] + "`");
        }
        have_coeff = true;
      }
      ++i;
    }
    expect("<=");
    if (i >= tokens.size()) throw parse_error("LP parse: missing rhs");
    try {
      c.rhs = std::stoi(tokens[i]);
    } catch (const std::exception&) {
      throw parse_error("LP parse: bad rhs `" + tokens[i] + "`");
    }
    ++i;
    m.constraints.push_back(std::move(c));
  }
  expect("Binary");
  int binary_vars = 0;
  while (i < tokens.size() && tokens[i] != "End") {
    if (detail::parse_var_token(tokens[i]) < 0)
      throw parse_error("LP parse: bad binary variable `" + tokens[i] + "`");
    ++i;
    ++binary_vars;
  }
  expect("End");
  if (binary_vars != m.num_vars)
    throw parse_error("LP parse: objective and binary sections disagree");
  return m;
}

/// Rebuilds the underlying graph from a parsed model, validating the
/// constraint family (one constraint c<v> per vertex, unit neighbour
/// coefficients, own term deg(v)·x_v, rhs 1 + deg(v), symmetry).
inline Graph graph_from_ip(const IpModel& m) {
  if (m.num_vars < 1 || m.num_vars > kMaxVertices)
    throw parse_error("model variable count out of range");
  if (static_cast<int>(m.constraints.size()) != m.num_vars)
    throw parse_error("model must have one constraint per vertex");
  Graph g(m.num_vars);
  for (const auto& c : m.constraints) {
    if (c.name.size() < 2 || c.name[0] != 'c')
      throw parse_error("bad constraint name `" + c.name + "`");
    int v = -1;
    try {
      v = std::stoi(c.name.substr(1));
    } catch (const std::exception&) {
      throw parse_error("bad constraint name `" + c.name + "`");
    }
    if (v < 0 || v >= m.num_vars)
      throw parse_error("constraint name out of range: " + c.name);
    for (auto [coeff, u] : c.terms) {
      if (u < 0 || u >= m.num_vars)
        throw parse_error("variable out of range in " + c.name);
      if (u == v) continue;  // own term checked below via degree
      if (coeff != 1)
        throw parse_error("non-unit neighbour coefficient in " + c.name);
      if (!g.adjacent(u, v)) g.add_edge(u, v);
    }
  }
  for (const auto& c : m.constraints) {
    int v = std::stoi(c.name.substr(1));
    int deg = g.degree(v);
    bool own_ok = deg == 0;  // degree-0 rows may omit or zero the own term
    for (auto [coeff, u] : c.terms)
      if (u == v && coeff == deg) own_ok = true;
    if (!own_ok)
      throw parse_error("own-variable coefficient mismatch in " + c.name);
    if (c.rhs != 1 + deg)
      throw parse_error("rhs mismatch in " + c.name + ": got " +
                        std::to_string(c.rhs) + ", expected " +
                        std::to_string(1 + deg));
  }
  return g;
}

/// Solves the model with the internal branch-and-bound (the feasible sets
/// are exactly the dissociation sets of the reconstructed graph).
inline SolveResult solve_ip(const IpModel& m, const SolveOptions& opts = {}) {
  return max_dissociation(graph_from_ip(m), opts);
}

}  // namespace mv

#endif

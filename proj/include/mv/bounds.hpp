#ifndef MV_BOUNDS_HPP
#define MV_BOUNDS_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "mv/graph.hpp"
#include "mv/profile.hpp"

namespace mv {

/// Floor of the integer square root; exact for all 64-bit inputs.
inline std::uint64_t isqrt(std::uint64_t x) {
  if (x == 0) return 0;
  auto sq = [](std::uint64_t r) {
    return static_cast<unsigned __int128>(r) * r;
  };
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && sq(r) > x) --r;
  while (sq(r + 1) <= x) ++r;
  return r;
}

namespace detail {

// Largest integer s >= 0 with s^2 + b*s + c <= 0; requires c <= 0 so the
// feasible interval contains 0. Bounded scan keeps everything in exact
// integer arithmetic.
inline int quadratic_root_floor(long long b, long long c) {
  if (c > 0) throw argument_error("quadratic has positive constant term");
  long long s = 0;
  while (true) {
    long long next = s + 1;
    if (next * next + b * next + c > 0) return static_cast<int>(s);
    s = next;
  }
}

}  // namespace detail

/// Diameter-2 bound from the common-neighbour double count:
/// largest s with s^2 + (Δ^2 - 2Δ - 1)s - Δ(Δ-1)n <= 0.
inline int prop1_bound(int n, int max_degree) {
  if (n < 2 || max_degree < 2)
    throw argument_error("prop1_bound requires n >= 2 and max degree >= 2");
  long long d = max_degree;
  return detail::quadratic_root_floor(d * d - 2 * d - 1,
                                      -d * (d - 1) * static_cast<long long>(n));
}

/// Bound for triangle-free d-regular unique-common-neighbour graphs:
/// floor(-2 + sqrt(4 + d(d-1)n)).
inline int lemma6_bound(int n, int d) {
  if (d < 3) throw argument_error("lemma6_bound requires degree >= 3");
  if (n < 1) throw argument_error("lemma6_bound requires n >= 1");
  return detail::quadratic_root_floor(
      4, -static_cast<long long>(d) * (d - 1) * n);
}

/// Cut-counting bound for d-regular graphs whose mutual-visibility sets
/// have induced degree <= 1: floor(d*n / (2d - 1)).
inline int degree_count_bound(int n, int d) {
  if (d < 1 || n < 1)
    throw argument_error("degree_count_bound requires n, d >= 1");
  return static_cast<int>((static_cast<long long>(d) * n) / (2 * d - 1));
}

/// Convexity-refined bound: largest s with
/// s^2 + ((d-1)^2 + (d-3) - n)s - n(d-3) <= 0. Certified for (n,d)=(50,7);
/// the derivation additionally assumes s >= 8 (see jensen_in_regime).
inline int jensen_bound(int n, int d) {
  if (d < 3) throw argument_error("jensen_bound requires degree >= 3");
  if (n < 1) throw argument_error("jensen_bound requires n >= 1");
  long long dd = d;
  return detail::quadratic_root_floor(
      (dd - 1) * (dd - 1) + (dd - 3) - n,
      -static_cast<long long>(n) * (dd - 3));
}

inline bool jensen_in_regime(int value) { return value >= 8; }

/// Moore bound: 1 + d * Σ_{i=0}^{k-1} (d-1)^i; for k=2 this is d^2 + 1.
inline std::uint64_t moore_bound(int d, int k) {
  if (d < 2 || k < 1) throw argument_error("moore_bound requires d >= 2, k >= 1");
  unsigned __int128 total = 1;
  unsigned __int128 power = 1;  // (d-1)^i
  for (int i = 0; i < k; ++i) {
    total += static_cast<unsigned __int128>(d) * power;
    power *= static_cast<unsigned __int128>(d - 1);
    if (total > std::numeric_limits<std::uint64_t>::max())
      throw range_error("moore_bound overflows 64 bits");
  }
  return static_cast<std::uint64_t>(total);
}

struct BoundEntry {
  std::optional<int> value;
  bool applicable = false;
  std::string reason;  // why absent, or a caveat on an applicable bound
};

struct BoundReport {
  BoundEntry prop1;
  BoundEntry lemma6;
  BoundEntry degree_count;
  BoundEntry jensen;
  std::optional<std::uint64_t> moore_n;
};

/// Hypothesis-checked aggregation of the four closed-form bounds. Bounds
/// whose hypotheses fail are reported absent with the failing condition.
inline BoundReport bound_report(const Graph& g) {
  GraphProfile p = profile(g);
  BoundReport r;

  if (!p.diameter)
    r.prop1.reason = "graph is disconnected";
  else if (*p.diameter > 2)
    r.prop1.reason = "diameter exceeds 2";
  else if (p.n < 2 || p.degree < 2)
    r.prop1.reason = "requires n >= 2 and max degree >= 2";
  else {
    r.prop1.applicable = true;
    r.prop1.value = prop1_bound(p.n, p.degree);
  }

  auto lemma4_reason = [&]() -> std::string {
    if (!p.triangle_free) return "graph has a triangle";
    if (!p.unique_common_neighbour) return "unique-common-neighbour fails";
    return "";
  };

  if (!p.lemma4_class) {
    r.lemma6.reason = lemma4_reason();
  } else if (!p.is_regular) {
    r.lemma6.reason = "graph is not regular";
  } else if (p.degree < 3) {
    r.lemma6.reason = "requires degree >= 3";
  } else {
    r.lemma6.applicable = true;
    r.lemma6.value = lemma6_bound(p.n, p.degree);
  }

  if (!p.is_regular)
    r.degree_count.reason = "graph is not regular";
  else if (!p.lemma4_class)
    r.degree_count.reason = lemma4_reason();
  else {
    r.degree_count.applicable = true;
    r.degree_count.value = degree_count_bound(p.n, p.degree);
  }

  if (!p.lemma4_class) {
    r.jensen.reason = lemma4_reason();
  } else if (!p.is_regular) {
    r.jensen.reason = "graph is not regular";
  } else if (p.degree < 3) {
    r.jensen.reason = "requires degree >= 3";
  } else {
    r.jensen.applicable = true;
    r.jensen.value = jensen_bound(p.n, p.degree);
    r.jensen.reason = jensen_in_regime(*r.jensen.value)
                          ? "generalized quadratic bound; certified for "
                            "(n,d) = (50,7)"
                          : "outside the s >= 8 regime of the derivation";
  }

  if (p.is_regular && p.degree >= 2 && p.diameter)
    r.moore_n = moore_bound(p.degree, *p.diameter);
  return r;
}

}  // namespace mv

#endif

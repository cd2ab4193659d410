#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mv/bounds.hpp"
#include "mv/graph.hpp"
#include "mv/profile.hpp"
#include "mv/solver.hpp"

using namespace mv;

namespace {

Graph random_connected(std::mt19937& rng, int max_n = 12) {
  std::uniform_int_distribution<int> size_dist(3, max_n);
  std::bernoulli_distribution edge(0.35);
  while (true) {
    Graph g(size_dist(rng));
    for (int u = 0; u < g.size(); ++u)
      for (int v = u + 1; v < g.size(); ++v)
        if (edge(rng)) g.add_edge(u, v);
    if (is_connected(g)) return g;
  }
}

}  // namespace

TEST_CASE("integer square root is exact") {
  std::uint64_t failures = 0;
  for (std::uint64_t k = 1; k <= 1000000; ++k) {
    if (isqrt(k * k) != k) ++failures;
    if (isqrt(k * k - 1) != k - 1) ++failures;
  }
  CHECK(failures == 0);
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(~std::uint64_t{0}) == 4294967295ULL);
}

TEST_CASE("prop1 bound") {
  CHECK(prop1_bound(10, 3) == 6);
  CHECK(prop1_bound(50, 7) == 31);
  CHECK(prop1_bound(5, 2) == 3);
  CHECK_THROWS_AS(prop1_bound(10, 1), argument_error);
  CHECK_THROWS_AS(prop1_bound(1, 3), argument_error);
}

TEST_CASE("lemma6 bound") {
  CHECK(lemma6_bound(10, 3) == 6);  // roots of s^2+4s-60 are -10 and 6
  CHECK(lemma6_bound(50, 7) == 43);
  CHECK_THROWS_AS(lemma6_bound(10, 2), argument_error);
  for (int d : {3, 4, 5}) {
    // Tight at (d^2+1, d) only for d = 3.
    long long n = d * d + 1;
    CHECK(lemma6_bound(static_cast<int>(n), d) ==
          detail::quadratic_root_floor(4, -static_cast<long long>(d) * (d - 1) * n));
  }
}

TEST_CASE("degree count bound") {
  CHECK(degree_count_bound(50, 7) == 26);  // floor(350/13)
  CHECK(degree_count_bound(10, 3) == 6);
  CHECK(degree_count_bound(5, 2) == 3);
  CHECK_THROWS_AS(degree_count_bound(5, 0), argument_error);
}

TEST_CASE("jensen bound") {
  CHECK(jensen_bound(50, 7) == 20);
  CHECK(jensen_bound(10, 3) == 6);
  CHECK(jensen_bound(26, 5) == 12);
  CHECK_THROWS_AS(jensen_bound(10, 2), argument_error);
  CHECK(jensen_in_regime(20));
  CHECK_FALSE(jensen_in_regime(6));
}

TEST_CASE("moore bound") {
  CHECK(moore_bound(7, 2) == 50);
  CHECK(moore_bound(3, 2) == 10);
  CHECK(moore_bound(2, 2) == 5);
  CHECK(moore_bound(57, 2) == 3250);
  CHECK(moore_bound(4, 1) == 5);  // K5
  CHECK_THROWS_AS(moore_bound(1, 2), argument_error);
  CHECK_THROWS_AS(moore_bound(1000, 10), range_error);
}

TEST_CASE("bound report on the moore graphs") {
  auto hs = bound_report(build_hoffman_singleton());
  CHECK(hs.prop1.value == 31);
  CHECK(hs.lemma6.value == 43);
  CHECK(hs.degree_count.value == 26);
  CHECK(hs.jensen.value == 20);
  CHECK(hs.moore_n == 50);
  // jensen <= degree_count <= prop1 <= lemma6 on this graph
  CHECK(*hs.jensen.value <= *hs.degree_count.value);
  CHECK(*hs.degree_count.value <= *hs.prop1.value);
  CHECK(*hs.prop1.value <= *hs.lemma6.value);

  auto p = bound_report(build_petersen());
  CHECK(p.prop1.value == 6);
  CHECK(p.lemma6.value == 6);
  CHECK(p.degree_count.value == 6);
  CHECK(p.jensen.value == 6);
  CHECK(p.moore_n == 10);
}

TEST_CASE("bound report hypothesis failures") {
  auto c4 = bound_report(build_cycle(4));
  CHECK_FALSE(c4.lemma6.applicable);
  CHECK_FALSE(c4.jensen.applicable);
  CHECK(c4.lemma6.reason ==
        "unique-common-neighbour fails");  // opposite vertices share two
  CHECK_FALSE(c4.degree_count.applicable);

  auto split = bound_report(build_disjoint_union(build_complete(2),
                                                 build_complete(2)));
  CHECK_FALSE(split.prop1.applicable);
  CHECK(split.prop1.reason == "graph is disconnected");
}

TEST_CASE("applicable bounds dominate the exact optimum") {
  std::mt19937 rng(90210);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_connected(rng);
    auto report = bound_report(g);
    int mu = mu_exact(g).optimum;
    if (report.prop1.applicable) CHECK(*report.prop1.value >= mu);
    if (report.lemma6.applicable) CHECK(*report.lemma6.value >= mu);
    if (report.degree_count.applicable) CHECK(*report.degree_count.value >= mu);
    // jensen is only asserted inside its regime
    if (report.jensen.applicable && jensen_in_regime(*report.jensen.value))
      CHECK(*report.jensen.value >= mu);
  }
  for (const Graph& g : {build_cycle(5), build_petersen()}) {
    auto report = bound_report(g);
    int mu = mu_exact(g).optimum;
    if (report.prop1.applicable) CHECK(*report.prop1.value >= mu);
    if (report.degree_count.applicable) CHECK(*report.degree_count.value >= mu);
  }
}

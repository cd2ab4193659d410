#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "mv/graph.hpp"
#include "mv/profile.hpp"
#include "mv/solver.hpp"
#include "mv/visibility.hpp"
#include "mv_oracle.hpp"

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

TEST_CASE("mu of small named graphs") {
  CHECK(mu_exact(build_cycle(5)).optimum == 3);
  CHECK(mu_exact(build_petersen()).optimum == 6);
  CHECK(mu_exact(build_complete(4)).optimum == 4);  // diameter 1
  CHECK_THROWS_AS(
      mu_exact(build_disjoint_union(build_complete(2), build_complete(2))),
      precondition_error);
}

TEST_CASE("max dissociation") {
  for (int n : {3, 4, 7}) CHECK(max_dissociation(build_complete(n)).optimum == 2);
  auto r = max_dissociation(build_petersen());
  CHECK(r.optimum == 6);
  CHECK(r.certificate.size() == 6);
  CHECK(detail::mv_lemma4(build_petersen(), r.certificate.mask));
}

TEST_CASE("solver certificates re-verify") {
  std::mt19937 rng(4321);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_connected(rng);
    auto r = mu_exact(g);
    CHECK(r.certificate.size() == r.optimum);
    CHECK_NOTHROW(verify_certificate(g, r.certificate, r.optimum));
  }
}

TEST_CASE("mu agrees with the exhaustive oracle") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_connected(rng, 10);
    auto coeffs = mv_oracle::polynomial(g);
    int oracle_mu = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] > 0) oracle_mu = static_cast<int>(i);
    CHECK(mu_exact(g).optimum == oracle_mu);
  }
}

TEST_CASE("max induced matching") {
  CHECK(max_induced_matching(build_cycle(5)).optimum == 1);
  auto r = max_induced_matching(build_petersen());
  CHECK(r.optimum == 3);
  REQUIRE(r.certificate_edges.size() == 3);
  CHECK(r.certificate.size() == 6);
  auto a = analyze_set(build_petersen(), r.certificate);
  CHECK(a.induced_max_degree == 1);
  CHECK(a.matching_edges.size() == 3);
}

TEST_CASE("petersen counting") {
  auto p = build_petersen();
  CHECK(count_induced_k_matchings(p, 2) == 15);
  CHECK(count_induced_k_matchings(p, 3) == 5);
  CHECK(count_induced_k_matchings(p, 4) == 0);
  CHECK(count_induced_k_matchings(p, 1) == 15);  // one per edge
  CHECK_THROWS_AS(count_induced_k_matchings(p, 0), argument_error);

  CHECK(count_independent_k_sets(p, 4) == 5);
  CHECK(count_independent_k_sets(p, 5) == 0);
  CHECK(count_independent_k_sets(p, 0) == 1);
  CHECK(count_independent_k_sets(p, 1) == 10);
  CHECK_THROWS_AS(count_independent_k_sets(p, -1), argument_error);
}

TEST_CASE("dissociation bound chain") {
  std::mt19937 rng(1618);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_connected(rng);
    int mim = max_induced_matching(g).optimum;
    int diss = max_dissociation(g).optimum;
    CHECK(2 * mim <= diss);
    auto p = profile(g);
    if (p.lemma4_class) CHECK(diss == mu_exact(g).optimum);
  }
}

TEST_CASE("canonical mode returns the lexicographically smallest optimum") {
  auto p = build_petersen();
  SolveOptions opts;
  opts.canonical = true;
  auto r = mu_exact(p, opts);
  REQUIRE(r.optimum == 6);
  // Enumerate all maximum sets and take the smallest one by ascending
  // vertex sequence.
  std::vector<Bits> maxima;
  for_each_mv_set(p, [&](Bits S) {
    if (popcount(S) == 6) maxima.push_back(S);
  });
  REQUIRE(maxima.size() == 5);
  Bits smallest = maxima[0];
  for (Bits S : maxima)
    if (detail::lex_less(S, smallest)) smallest = S;
  CHECK(r.certificate.mask == smallest);
}

TEST_CASE("node limit yields best-known with proven=false") {
  SolveOptions opts;
  opts.node_limit = 1;
  auto r = max_dissociation(build_petersen(), opts);
  CHECK_FALSE(r.proven);
  CHECK(r.optimum >= 2);  // greedy incumbent survives
}

TEST_CASE("verify_certificate failure paths") {
  auto p = build_petersen();
  VertexSet path3{bit(0) | bit(7) | bit(8)};
  CHECK_THROWS_AS(verify_certificate(p, path3, 4), verification_error);
  CHECK_THROWS_WITH(verify_certificate(p, path3, 3),
                    Catch::Matchers::ContainsSubstring("not a mutual"));
  VertexSet matching{bit(0) | bit(9)};
  CHECK_NOTHROW(verify_certificate(p, matching, 2));
}

TEST_CASE("ip model shape") {
  auto p_model = build_ip_model(build_petersen());
  CHECK(p_model.num_vars == 10);
  REQUIRE(p_model.constraints.size() == 10);
  for (const auto& c : p_model.constraints) {
    CHECK(c.rhs == 4);  // 1 + 3
    CHECK(c.terms.size() == 4);
  }
  auto h_model = build_ip_model(build_hoffman_singleton());
  CHECK(h_model.num_vars == 50);
  REQUIRE(h_model.constraints.size() == 50);
  for (const auto& c : h_model.constraints) CHECK(c.rhs == 8);

  auto k1_model = build_ip_model(build_complete(1));
  CHECK(k1_model.constraints[0].rhs == 1);
  CHECK(solve_ip(k1_model).optimum == 1);
}

TEST_CASE("lp export layout") {
  auto text = export_lp_string(build_ip_model(build_complete(2)));
  CHECK(text ==
        "Maximize\n"
        " obj: x0 + x1\n"
        "Subject To\n"
        " c0: x1 + x0 <= 2\n"
        " c1: x0 + x1 <= 2\n"
        "Binary\n"
        " x0 x1\n"
        "End\n");
}

TEST_CASE("lp round trip on petersen") {
  auto model = build_ip_model(build_petersen());
  auto text = export_lp_string(model);
  std::istringstream in(text);
  auto parsed = parse_lp(in);
  CHECK(export_lp_string(parsed) == text);
  CHECK(solve_ip(parsed).optimum == 6);
}

TEST_CASE("lp parse errors") {
  {
    std::istringstream in("Minimize\n obj: x0\n");
    CHECK_THROWS_AS(parse_lp(in), parse_error);
  }
  {
    std::istringstream in(
        "Maximize\n obj: x0 + x1\nSubject To\n c0: x1 + x0 <= 9\n"
        " c1: x0 + x1 <= 2\nBinary\n x0 x1\nEnd\n");
    auto m = parse_lp(in);
    CHECK_THROWS_WITH(graph_from_ip(m),
                      Catch::Matchers::ContainsSubstring("rhs mismatch"));
  }
  {
    std::istringstream in("Maximize\n obj: x0\nSubject To\nBinary\n x0 x1\nEnd\n");
    CHECK_THROWS_AS(parse_lp(in), parse_error);
  }
}

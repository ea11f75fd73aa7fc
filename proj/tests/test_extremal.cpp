#include <doctest.h>

#include "ramsey/abbott.hpp"
#include "ramsey/extremal.hpp"
#include "support/oracle.hpp"

using namespace ramsey;

TEST_CASE("max_clique on named graphs") {
  CHECK(max_clique(empty_graph(5)).size == 1);
  CHECK(max_clique(complete_graph(6)).size == 6);
  CHECK(max_clique(cycle_graph(5)).size == 2);

  Graph paley = oracle::paley_graph(17);
  CliqueWitness w = max_clique(paley);
  CHECK(w.size == 3);
  CHECK(is_clique(paley, w.vertices));
  // the independent oracle agrees there is no 4-clique
  CHECK(!oracle::has_clique_combinations(paley, 4));
}

TEST_CASE("max_independent_set duality") {
  CHECK(max_independent_set(complete_graph(6)).size == 1);
  CHECK(max_independent_set(empty_graph(5)).size == 5);
  Graph c5 = cycle_graph(5);
  CliqueWitness w = max_independent_set(c5);
  CHECK(w.size == 2);
  CHECK(is_independent_set(c5, w.vertices));
  CHECK(!oracle::has_independent_combinations(c5, 3));

  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Graph g = oracle::random_graph(9, seed);
    CHECK(max_independent_set(g).size == max_clique(complement(g)).size);
  }
}

TEST_CASE("decision variant") {
  CHECK(!has_clique_of_size(cycle_graph(5), 3));
  auto w = has_clique_of_size(complete_graph(4), 4);
  REQUIRE(w.has_value());
  CHECK(w->vertices.members() == std::vector<int>{0, 1, 2, 3});
  CHECK(!has_clique_of_size(oracle::paley_graph(17), 4));
  CHECK_THROWS_AS(has_clique_of_size(complete_graph(3), 0), std::invalid_argument);

  // agreement with the exact solver
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = oracle::random_graph(10, seed * 31 + 1);
    int omega = max_clique(g).size;
    for (int t = 1; t <= 10; ++t)
      CHECK(has_clique_of_size(g, t).has_value() == (omega >= t));
  }
}

TEST_CASE("solver equals the subset-enumeration oracle") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    int n = 1 + static_cast<int>(seed % 10);
    double p = 0.2 + 0.6 * static_cast<double>(seed % 7) / 6.0;
    Graph g = oracle::random_graph(n, seed ^ 0xabcdef, p);
    CAPTURE(seed);
    CHECK(max_clique(g).size == oracle::max_clique_subsets(g));
    CHECK(max_independent_set(g).size == oracle::max_independent_subsets(g));
  }
}

TEST_CASE("witnesses always validate") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = oracle::random_graph(11, seed + 500);
    CliqueWitness w = max_clique(g);
    CHECK(w.size == w.vertices.size());
    CHECK(is_clique(g, w.vertices));
    CliqueWitness iw = max_independent_set(g);
    CHECK(is_independent_set(g, iw.vertices));
  }
}

TEST_CASE("induced subgraphs never increase omega or alpha") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 4 + static_cast<int>(rng() % 9);  // orders 4..12
    Graph g = oracle::random_graph(n, rng());
    std::vector<int> picked;
    for (int v = 0; v < n; ++v)
      if (rng() % 2) picked.push_back(v);
    if (picked.empty()) picked.push_back(static_cast<int>(rng() % n));
    Graph sub = induced_subgraph(g, VertexSet::checked(picked));
    CHECK(max_clique(sub).size <= max_clique(g).size);
    CHECK(max_independent_set(sub).size <= max_independent_set(g).size);
  }
}

TEST_CASE("adding an edge never hurts omega or helps alpha") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = oracle::random_graph(12, static_cast<std::uint64_t>(trial), 0.4);
    std::vector<std::pair<int, int>> non_edges;
    for (int i = 0; i < 12; ++i)
      for (int j = i + 1; j < 12; ++j)
        if (!g.adjacent(i, j)) non_edges.emplace_back(i, j);
    if (non_edges.empty()) continue;
    auto [u, v] = non_edges[rng() % non_edges.size()];
    Graph g2 = g;
    g2.add_edge(u, v);
    CHECK(max_clique(g2).size >= max_clique(g).size);
    CHECK(max_independent_set(g2).size <= max_independent_set(g).size);
  }
}

TEST_CASE("deterministic lexicographically-least witness") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = oracle::random_graph(14, seed * 97);
    CliqueWitness a = max_clique(g);
    CliqueWitness b = max_clique(g);
    CHECK(a.vertices == b.vertices);
  }
}

TEST_CASE("verify_bounds exact mode") {
  VerificationReport r = verify_bounds(cycle_graph(5), 3, VerifyMode::exact);
  CHECK(r.omega == 2);
  CHECK(r.alpha == 2);
  CHECK(r.passed);
  CHECK(r.exact);

  VerificationReport k4 = verify_bounds(complete_graph(4), 3, VerifyMode::exact);
  CHECK(k4.omega == 4);
  CHECK(!k4.passed);

  VerificationReport sq = verify_bounds(abbott_power(cycle_graph(5), 2), 5, VerifyMode::exact);
  CHECK(sq.omega == 4);
  CHECK(sq.alpha == 4);
  CHECK(sq.passed);
}

TEST_CASE("verify_bounds decision mode") {
  VerificationReport r = verify_bounds(cycle_graph(5), 3, VerifyMode::decision);
  CHECK(r.passed);
  CHECK(!r.exact);
  CHECK(r.omega < 3);
  CHECK(r.alpha < 3);

  VerificationReport f = verify_bounds(complete_graph(4), 3, VerifyMode::decision);
  CHECK(!f.passed);
  CHECK(f.omega == 3);  // the found witness is a lower bound of exactly the tested size
  CHECK(is_clique(complete_graph(4), f.omega_witness.vertices));

  CHECK_THROWS_AS(verify_bounds(cycle_graph(5), 1, VerifyMode::decision), std::invalid_argument);

  // pass/fail agrees with exact mode on a sample, and the report invariant
  // passed <=> (omega < bound and alpha < bound) holds in both modes
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = oracle::random_graph(10, seed + 900);
    for (int bound = 2; bound <= 5; ++bound) {
      VerificationReport d = verify_bounds(g, bound, VerifyMode::decision);
      VerificationReport e = verify_bounds(g, bound, VerifyMode::exact);
      CHECK(d.passed == e.passed);
      CHECK(d.passed == (d.omega < bound && d.alpha < bound));
      CHECK(e.passed == (e.omega < bound && e.alpha < bound));
      CHECK(is_clique(g, d.omega_witness.vertices));
      CHECK(is_independent_set(g, d.alpha_witness.vertices));
    }
  }
}

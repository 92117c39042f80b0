#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "specgraph/spectral.hpp"

using namespace specgraph;

namespace {

Graph paw() { return Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

Graph connected_random(std::mt19937_64& rng, int n, double p) {
  for (;;) {
    Graph g = oracle::random_graph(rng, n, p);
    if (is_connected(g)) return g;
  }
}

}  // namespace

TEST_CASE("perron root of complete graphs") {
  for (int n = 1; n <= 64; ++n) {
    const PerronPair pp = perron(complete(n));
    CHECK(std::abs(pp.rho - (n - 1)) <= 1e-12);
  }
}

TEST_CASE("perron root of small named graphs") {
  CHECK(perron(path_graph(4)).rho == doctest::Approx(1.6180339887498948).epsilon(1e-13));
  CHECK(perron(paw()).rho == doctest::Approx(2.1700864866260337).epsilon(1e-13));
  CHECK(perron(cycle_graph(9)).rho == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(perron(star_graph(9)).rho == doctest::Approx(3.0).epsilon(1e-13));
  // Bipartite input: the shift keeps power iteration from oscillating.
  CHECK(perron(path_graph(30)).rho == doctest::Approx(2 * std::cos(M_PI / 31)).epsilon(1e-12));
}

TEST_CASE("perron vector is positive, unit and an eigenvector") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 40);
    const Graph g = connected_random(rng, n, 0.25);
    const PerronPair pp = perron(g);
    double norm = 0.0;
    for (double x : pp.vec) {
      CHECK(x > 0.0);
      norm += x * x;
    }
    CHECK(std::abs(norm - 1.0) <= 1e-12);
    CHECK(pp.residual <= 1e-10 * std::max(1.0, pp.rho));
    CHECK(eigen_residual(g, pp.vec, pp.rho) == doctest::Approx(pp.residual).epsilon(1e-6));
  }
}

TEST_CASE("twin reduction does not change the answer") {
  std::mt19937_64 rng(9);
  PerronOptions plain;
  plain.reduce_twins = false;
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = connected_random(rng, 3 + static_cast<int>(rng() % 20), 0.4);
    CHECK(perron(g).rho == doctest::Approx(perron(g, plain).rho).epsilon(1e-12));
  }
  const Graph g = extremal_graph(ExtremalParams::make(40, 5, 12));
  CHECK(perron(g).rho == doctest::Approx(perron(g, plain).rho).epsilon(1e-12));
}

TEST_CASE("perron input checks") {
  CHECK_THROWS_AS(perron(disjoint_union(complete(2), complete(3))), std::invalid_argument);
  const PerronPair single = perron(Graph(1));
  CHECK(single.rho == 0.0);
  CHECK(single.vec == std::vector<double>{1.0});
  PerronOptions tiny;
  tiny.max_iterations = 2;
  tiny.reduce_twins = false;
  CHECK_THROWS_AS(perron(path_graph(50), tiny), NonConvergence);
}

TEST_CASE("full spectrum") {
  const Spectrum k4 = full_spectrum(adjacency_matrix(complete(4)));
  CHECK(k4.largest() == doctest::Approx(3.0));
  for (int i = 0; i < 3; ++i) CHECK(k4.eigs[i] == doctest::Approx(-1.0));

  const Spectrum c6 = full_spectrum(adjacency_matrix(cycle_graph(6)));
  const std::vector<double> expected{-2, -1, -1, 1, 1, 2};
  for (int i = 0; i < 6; ++i) CHECK(c6.eigs[i] == doctest::Approx(expected[i]).epsilon(1e-12));

  DenseMatrix asym(2, 2);
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(full_spectrum(asym), std::invalid_argument);
  CHECK_THROWS_AS(full_spectrum(DenseMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("power iteration agrees with the dense solver") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = connected_random(rng, 2 + static_cast<int>(rng() % 30), 0.3);
    const Spectrum s = full_spectrum(adjacency_matrix(g));
    CHECK(std::abs(perron(g).rho - s.largest()) <= 1e-9);
    double trace = 0.0, trace2 = 0.0;
    for (double e : s.eigs) {
      trace += e;
      trace2 += e * e;
    }
    CHECK(std::abs(trace) <= 1e-9);
    CHECK(trace2 == doctest::Approx(2.0 * static_cast<double>(g.edge_count())).epsilon(1e-10));
  }
}

TEST_CASE("rayleigh quotient bound") {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = connected_random(rng, 2 + static_cast<int>(rng() % 15), 0.5);
    const double rho = perron(g).rho;
    std::vector<double> y(g.order());
    double norm = 0.0;
    for (double& v : y) {
      v = u(rng);
      norm += v * v;
    }
    CHECK(quadratic_form(g, y) <= rho * norm + 1e-9);
  }
}

TEST_CASE("characteristic polynomials") {
  CHECK(int_charpoly(paw()).to_string() == IntPoly({1, -2, -4, 0, 1}).to_string());
  CHECK(int_charpoly(complete(3)) == IntPoly({-2, -3, 0, 1}));
  CHECK(int_charpoly(Graph(1)) == IntPoly({0, 1}));
  CHECK_THROWS_AS(int_charpoly(Graph(kCharpolyMaxOrder + 1)), std::invalid_argument);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 7), 0.5);
    const oracle::Poly p = oracle::charpoly_cofactor(oracle::adjacency(g));
    CHECK(int_charpoly(g) == IntPoly(std::vector<BigInt>(p.begin(), p.end())));
  }
  // Non-adjacency matrices go through the general recurrence.
  const std::vector<std::vector<long long>> m{{2, 1, 0}, {1, 3, 4}, {0, 4, -1}};
  const oracle::Poly p = oracle::charpoly_cofactor(m);
  CHECK(integer_charpoly(m) == IntPoly(std::vector<BigInt>(p.begin(), p.end())));
}

TEST_CASE("exact radius comparison") {
  const Graph c5 = cycle_graph(5);
  const Graph rewired = Graph::from_edges(5, std::vector<Edge>{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(int_charpoly(rewired) == IntPoly({2, 3, -4, -6, 0, 1}));
  CHECK(perron(rewired).rho == doctest::Approx(2.6411864761932919).epsilon(1e-13));
  CHECK(exact_compare_rho(c5, rewired) == RhoOrder::less);
  CHECK(exact_compare_rho(rewired, c5) == RhoOrder::greater);
  CHECK(exact_compare_rho(c5, cycle_graph(5)) == RhoOrder::equal_poly);
  // C6 and K_{1,4} share radius 2 with different polynomials.
  CHECK(exact_compare_rho(cycle_graph(6), star_graph(4)) == RhoOrder::equal_root);
  CHECK_THROWS_AS(exact_compare_rho(Graph(2), c5), std::invalid_argument);
  CHECK(std::string(to_string(RhoOrder::equal_root)) == "equal_root");
}

TEST_CASE("small spectra") {
  CHECK(perron(complete(6)).rho == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(perron(star_graph(4)).rho == doctest::Approx(2.0).epsilon(1e-12));
  const Spectrum k3 = full_spectrum(adjacency_matrix(complete(3)));
  CHECK(k3.eigs[0] == doctest::Approx(-1.0));
  CHECK(k3.eigs[1] == doctest::Approx(-1.0));
  CHECK(k3.eigs[2] == doctest::Approx(2.0));
  CHECK(full_spectrum(adjacency_matrix(cycle_graph(5))).largest() == doctest::Approx(2.0).epsilon(1e-12));
  const Graph g = extremal_graph(ExtremalParams::make(7, 2, 3));
  CHECK(std::abs(full_spectrum(adjacency_matrix(g)).largest() - perron(g).rho) <= 1e-9);
}

TEST_CASE("characteristic polynomial trace coefficients") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 14);
    const Graph g = oracle::random_graph(rng, n, 0.4);
    const IntPoly p = int_charpoly(g);
    CHECK(p.degree() == n);
    CHECK(p.leading() == 1);
    CHECK(p.coeff(n - 1) == 0);
    CHECK(p.coeff(n - 2) == -static_cast<long long>(g.edge_count()));
  }
}

TEST_CASE("characteristic polynomial vanishes on the spectrum") {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 9), 0.5);
    const IntPoly p = int_charpoly(g);
    for (double e : full_spectrum(adjacency_matrix(g)).eigs) CHECK(std::abs(p.eval(e)) <= 1e-6);
  }
}

TEST_CASE("spectrum trace invariants") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 40);
    const Graph g = oracle::random_graph(rng, n, 0.3);
    double s1 = 0.0, s2 = 0.0;
    for (double e : full_spectrum(adjacency_matrix(g)).eigs) {
      s1 += e;
      s2 += e * e;
    }
    CHECK(std::abs(s1) <= 1e-9 * n);
    CHECK(std::abs(s2 - 2.0 * static_cast<double>(g.edge_count())) <= 1e-8 * n);
  }
}

TEST_CASE("average degree and maximum degree bound the radius") {
  std::mt19937_64 rng(104);
  auto check = [](const Graph& g, bool regular) {
    const double rho = perron(g).rho;
    const double avg = 2.0 * static_cast<double>(g.edge_count()) / g.order();
    const double maxd = max_degree(g);
    CHECK(avg <= rho + 1e-12);
    CHECK(rho <= maxd + 1e-12);
    CHECK((std::abs(rho - avg) <= 1e-9) == regular);
    CHECK((std::abs(rho - maxd) <= 1e-9) == regular);
  };
  for (int n = 3; n <= 12; ++n) {
    check(cycle_graph(n), true);
    check(complete(n), true);
    check(path_graph(n), false);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = connected_random(rng, 3 + static_cast<int>(rng() % 12), 0.4);
    check(g, min_degree(g) == max_degree(g));
  }
}

TEST_CASE("proper connected subgraphs have smaller radius") {
  std::mt19937_64 rng(105);
  int pairs = 0;
  while (pairs < 200) {
    const Graph g = connected_random(rng, 3 + static_cast<int>(rng() % 8), 0.5);
    Graph h = g;
    if (rng() % 2 == 0) {
      const auto e = g.edges();
      const auto [u, v] = e[rng() % e.size()];
      h.remove_edge(u, v);
    } else {
      const std::vector<int> drop{static_cast<int>(rng() % g.order())};
      h = delete_vertices(g, drop);
    }
    if (!is_connected(h)) continue;
    CHECK(perron(h).rho < perron(g).rho - 1e-12);
    ++pairs;
  }
  Graph k4e = complete(4);
  k4e.remove_edge(0, 1);
  CHECK(exact_compare_rho(complete(4), k4e) == RhoOrder::greater);
  CHECK(exact_compare_rho(cycle_graph(4), star_graph(3)) == RhoOrder::greater);
}

#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "specgraph/connectivity.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/isomorphism.hpp"

using namespace specgraph;

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
  auto d = degree_sequence(g);
  std::sort(d.begin(), d.end());
  return d;
}

Graph paw() { return Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

}  // namespace

TEST_CASE("complete graphs") {
  CHECK(complete(1).order() == 1);
  CHECK(complete(1).edge_count() == 0);
  const Graph k4 = complete(4);
  CHECK(k4.edge_count() == 6);
  for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
  CHECK_THROWS_AS(complete(0), std::invalid_argument);
  CHECK(complete(130).edge_count() == 130 * 129 / 2);
}

TEST_CASE("graph rejects self-loops and bad ids") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
  CHECK_THROWS_AS(g.degree(-1), std::out_of_range);
}

TEST_CASE("join and disjoint union") {
  CHECK(join(complete(1), complete(1)) == complete(2));
  CHECK(join(complete(2), complete(3)) == complete(5));

  const Graph two = disjoint_union(complete(1), complete(1));
  CHECK(two.order() == 2);
  CHECK(two.edge_count() == 0);

  const Graph u = disjoint_union(complete(2), complete(3));
  CHECK(u.order() == 5);
  CHECK(u.edge_count() == 4);
  CHECK(connected_components(u).size() == 2);

  // Rows that straddle word boundaries.
  const Graph big = disjoint_union(complete(70), cycle_graph(60));
  CHECK(big.edge_count() == 70 * 69 / 2 + 60);
  CHECK(big.adjacent(70, 129));
  CHECK_FALSE(big.adjacent(69, 70));
}

TEST_CASE("union of the two cliques has minimum degree delta - k") {
  // Direct degree count: the smaller clique K_{delta-k+1} has degree delta-k.
  for (int n = 4; n <= 14; ++n)
    for (int k = 1; k <= n - 2; ++k)
      for (int delta = k; delta <= n - 2; ++delta) {
        const ExtremalParams p{n, k, delta};
        if (p.small_clique() > p.large_clique()) continue;
        CHECK(min_degree(disjoint_union(complete(p.small_clique()), complete(p.large_clique()))) == delta - k);
      }
}

TEST_CASE("join edge count property") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int a = 1 + static_cast<int>(rng() % 10);
    const int b = 1 + static_cast<int>(rng() % 10);
    const Graph g = oracle::random_graph(rng, a, 0.5);
    const Graph h = oracle::random_graph(rng, b, 0.5);
    const Graph j = join(g, h);
    CHECK(j.edge_count() == g.edge_count() + h.edge_count() + static_cast<std::size_t>(a * b));
  }
}

TEST_CASE("extremal graph examples") {
  const Graph g411 = extremal_graph(ExtremalParams::make(4, 1, 1));
  CHECK(g411.edge_count() == 4);
  CHECK(is_isomorphic(g411, paw()));

  const Graph g723 = extremal_graph(ExtremalParams::make(7, 2, 3));
  CHECK(degree_sequence(g723) == std::vector<int>{6, 6, 3, 3, 4, 4, 4});
  CHECK(min_degree(g723) == 3);
  CHECK(oracle::brute_force_kappa(g723) == 2);

  for (int k = 1; k <= 6; ++k) {
    // Both cliques are K_1: K_{k+2} minus the edge between them.
    const Graph g = extremal_graph(ExtremalParams::make(k + 2, k, k));
    CHECK(g.edge_count() == static_cast<std::size_t>((k + 2) * (k + 1) / 2 - 1));
    CHECK_FALSE(g.adjacent(k, k + 1));
  }
}

TEST_CASE("extremal params diagnostics name the violated inequality") {
  auto message = [](int n, int k, int d) {
    try {
      ExtremalParams::make(n, k, d);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(5, 4, 4).find("delta <= n-2") != std::string::npos);
  CHECK(message(5, 0, 2).find("1 <= k") != std::string::npos);
  CHECK(message(7, 3, 2).find("k <= delta") != std::string::npos);
}

TEST_CASE("extremal degree multiset and min-degree flag") {
  for (int n = 4; n <= 12; ++n)
    for (int k = 1; k <= n - 2; ++k)
      for (int delta = k; delta <= n - 2; ++delta) {
        const ExtremalParams p{n, k, delta};
        const Graph g = extremal_graph(p);
        std::vector<int> expected;
        expected.insert(expected.end(), k, n - 1);
        expected.insert(expected.end(), delta - k + 1, delta);
        expected.insert(expected.end(), n - delta - 1, n - delta - 2 + k);
        std::sort(expected.begin(), expected.end());
        CHECK(sorted_degrees(g) == expected);
        CHECK(p.realizes_min_degree() == (min_degree(g) == delta));
      }
}

TEST_CASE("K_k + (K_1 u K_{n-k-1})") {
  CHECK(is_isomorphic(shiu_graph(4, 1), paw()));
  for (int n = 2; n <= 9; ++n) CHECK(shiu_graph(n, n - 1) == complete(n));
  CHECK(sorted_degrees(shiu_graph(5, 2)) == std::vector<int>{2, 3, 3, 4, 4});
  for (int n = 3; n <= 10; ++n)
    for (int k = 1; k <= n - 2; ++k)
      CHECK(is_isomorphic(extremal_graph(ExtremalParams::make(n, k, k)), shiu_graph(n, k)));
  CHECK_THROWS_AS(shiu_graph(5, 5), std::invalid_argument);
}

TEST_CASE("degree, connectivity and induced subgraphs") {
  CHECK(min_degree(complete(5)) == 4);
  CHECK_FALSE(is_connected(disjoint_union(complete(2), complete(2))));
  CHECK(is_connected(complete(1)));
  CHECK(is_connected(path_graph(200)));

  const Graph g = extremal_graph(ExtremalParams::make(7, 2, 3));
  const std::vector<int> s_and_a{0, 1, 2, 3};
  CHECK(induced_subgraph(g, s_and_a) == complete(4));
  const std::vector<int> s_and_b{0, 1, 4, 5, 6};
  CHECK(induced_subgraph(g, s_and_b) == complete(5));

  const std::vector<int> bad{0, 9};
  CHECK_THROWS_AS(induced_subgraph(g, bad), std::out_of_range);
  CHECK_THROWS_AS(induced_subgraph(g, std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("upper mask round trip") {
  for (std::uint64_t mask = 0; mask < 64; ++mask) CHECK(Graph::from_upper_mask(4, mask).upper_mask() == mask);
  // Bit order: (0,1), (0,2), (1,2), ...
  CHECK(Graph::from_upper_mask(3, 0b100).adjacent(1, 2));
}

TEST_CASE("edge list reader") {
  std::istringstream in("# path\n0 1\n1 2\n\n2 3  # tail\n");
  const Graph g = read_edge_list(in);
  CHECK(g == path_graph(4));

  std::istringstream with_order("6\n0 1\n");
  CHECK(read_edge_list(with_order).order() == 6);

  std::istringstream bad("0 1\n1 x\n");
  try {
    read_edge_list(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::istringstream loop("0 0\n");
  CHECK_THROWS_AS(read_edge_list(loop), ParseError);
  std::istringstream three("0 1 2\n");
  CHECK_THROWS_AS(read_edge_list(three), ParseError);

  std::istringstream again(write_edge_list(cycle_graph(5)));
  CHECK(read_edge_list(again) == cycle_graph(5));
}

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/poly.hpp"

using namespace specgraph;

namespace {

IntPoly P(std::initializer_list<long long> c) {
  std::vector<BigInt> v;
  for (long long x : c) v.emplace_back(x);
  return IntPoly(v);
}

}  // namespace

TEST_CASE("dyadic arithmetic") {
  const Dyadic half = Dyadic::from_double(0.5);
  CHECK(half.to_double() == 0.5);
  CHECK(Dyadic::from_int(1) == Dyadic{BigInt(4), 2});
  CHECK(midpoint(Dyadic::from_int(0), Dyadic::from_int(1)) == half);
  CHECK(Dyadic::from_double(-3.25) < Dyadic::from_double(-3.0));
  CHECK(Dyadic::from_double(0.1).to_double() == 0.1);
}

TEST_CASE("polynomial basics") {
  const IntPoly p = P({1, -2, -4, 0, 1});  // x^4 - 4x^2 - 2x + 1
  CHECK(p.degree() == 4);
  CHECK(p.derivative() == P({-2, -8, 0, 4}));
  CHECK(p.eval(2.0) == doctest::Approx(-3.0));
  CHECK(p.sign_at(Dyadic::from_int(2)) == -1);
  CHECK(p.sign_at(Dyadic::from_int(3)) == 1);
  CHECK(P({0, 0, 0}).is_zero());
  CHECK(primitive_part(P({-4, 6, -2})) == P({2, -3, 1}));
  CHECK(gcd(P({-1, 0, 1}), P({1, 2, 1})) == P({1, 1}));
  CHECK(gcd(P({-2, 1}), P({-3, 1})) == P({1}));
}

TEST_CASE("sturm root counts") {
  // (x-1)(x-2)(x-3)
  const SturmSequence s(P({-6, 11, -6, 1}));
  CHECK(s.count_roots(Dyadic::from_int(0), Dyadic::from_int(10)) == 3);
  CHECK(s.count_roots(Dyadic::from_double(1.5), Dyadic::from_int(10)) == 2);
  // Repeated roots count once: (x-1)^2 (x+2)
  const SturmSequence r(P({2, -3, 0, 1}));
  CHECK(r.count_roots(Dyadic::from_int(-10), Dyadic::from_int(10)) == 2);
  // No real roots.
  const SturmSequence none(P({1, 0, 1}));
  CHECK(none.count_roots(Dyadic::from_int(-10), Dyadic::from_int(10)) == 0);
  CHECK_THROWS_AS(isolate_largest_root(P({1, 0, 1})), std::domain_error);
}

TEST_CASE("largest root isolation") {
  const IntPoly paw = P({1, -2, -4, 0, 1});
  RootInterval iv = isolate_largest_root(paw);
  refine(SturmSequence(paw), iv, 50);
  CHECK(iv.lo.to_double() == doctest::Approx(2.1700864866260337).epsilon(1e-15));
  CHECK(iv.hi.to_double() - iv.lo.to_double() <= 1e-15);

  // Integer root lands exactly on a dyadic point.
  RootInterval k3 = isolate_largest_root(P({-2, -3, 0, 1}));
  refine(SturmSequence(P({-2, -3, 0, 1})), k3, 40);
  CHECK(k3.lo < Dyadic::from_int(2));
  CHECK(Dyadic::from_int(2) < k3.hi);
}

TEST_CASE("isolation agrees with rational bisection on graph polynomials") {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 200) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    if (!is_connected(g)) continue;
    const oracle::Poly p = oracle::charpoly_cofactor(oracle::adjacency(g));
    const IntPoly ip(std::vector<BigInt>(p.begin(), p.end()));
    RootInterval iv = isolate_largest_root(ip);
    refine(SturmSequence(ip), iv, 45);
    CHECK(iv.lo.to_double() == doctest::Approx(oracle::bisect_largest_root(p)).epsilon(1e-12));
    ++checked;
  }
}

TEST_CASE("largest root comparison") {
  const IntPoly k3 = P({-2, -3, 0, 1});  // largest root 2
  const IntPoly lin2 = P({-2, 1});
  const IntPoly paw = P({1, -2, -4, 0, 1});
  CHECK(compare_largest_roots(k3, lin2) == RootOrder::equal);
  CHECK(compare_largest_roots(paw, k3) == RootOrder::greater);
  CHECK(compare_largest_roots(k3, paw) == RootOrder::less);
  // x^2 - 2 against x - 1.4142135 scaled: sqrt 2 vs 14142135/10^7.
  CHECK(compare_largest_roots(P({-2, 0, 1}), P({-14142135, 10000000})) == RootOrder::greater);
  CHECK(compare_largest_roots(P({-2, 0, 1}), P({-14142136, 10000000})) == RootOrder::less);
}

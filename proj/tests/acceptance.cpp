// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "oracles.hpp"
#include "specgraph/census.hpp"
#include "specgraph/connectivity.hpp"
#include "specgraph/graph6.hpp"
#include "specgraph/isomorphism.hpp"
#include "specgraph/quotient.hpp"
#include "specgraph/rewiring.hpp"
#include "specgraph/spectral.hpp"
#include "specgraph/suites.hpp"

using namespace specgraph;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Graph connected_random(std::mt19937_64& rng, int n, double p) {
  for (;;) {
    Graph g = oracle::random_graph(rng, n, p);
    if (is_connected(g)) return g;
  }
}

Outcome main_census() {
  int classes = 0, bad = 0;
  for (int n = 4; n <= 7; ++n) {
    const auto grid = main_grid_classes(n);
    for (const CensusResult& r : run_census_batch(n, grid)) {
      ++classes;
      if (!(r.unique && r.matches_extremal)) {
        ++bad;
        std::fprintf(stderr, "  main census (%d,%d,%d): unique=%d matches=%d\n", r.spec.n, r.spec.k, r.spec.delta,
                     r.unique, r.matches_extremal);
      }
    }
  }
  return {bad == 0, fmt("%d classes, %d failures", classes, bad)};
}

Outcome unconstrained_census() {
  int runs = 0, bad = 0;
  for (int n = 4; n <= 7; ++n)
    for (int k = 1; k <= n - 2; ++k) {
      const CensusResult r = verify_shiu(n, k);
      ++runs;
      const bool winner = r.unique && !r.maximizers.empty() && is_isomorphic(r.maximizers[0], shiu_graph(n, k));
      if (!(winner && r.matches_extremal)) {
        ++bad;
        std::fprintf(stderr, "  kappa-only census (%d,%d) failed\n", n, k);
      }
    }
  return {bad == 0, fmt("%d (n,k) pairs, %d failures", runs, bad)};
}

Outcome cubic_formula() {
  const CubicGridReport r = verify_cubic_grid(3, 200, 1e-9);
  std::uint64_t det_mismatch = 0;
  for (const ExtremalParams& p : extremal_grid(3, 200)) {
    const oracle::Poly det = oracle::charpoly_cofactor(three_part_quotient(p).integer_entries());
    const CubicCoeffs c = cubic_coefficients(p);
    if (det != oracle::Poly{c.c0, c.c1, c.c2, 1}) ++det_mismatch;
  }
  for (const CubicCheck& c : r.failures)
    std::fprintf(stderr, "  cubic (%d,%d,%d): coeffs=%d quotient=%d root=%d err=%.3g\n", c.params.n, c.params.k,
                 c.params.delta, c.coefficients_match, c.quotient_matches_graph, c.root_matches,
                 std::abs(c.cubic_root - c.rho));
  return {r.failures.empty() && det_mismatch == 0,
          fmt("%llu triples, max |root - rho| = %.2e, %zu failures, %llu determinant mismatches",
              static_cast<unsigned long long>(r.triples), r.max_root_error, r.failures.size(),
              static_cast<unsigned long long>(det_mismatch))};
}

Outcome rewiring() {
  const RewireSuiteReport r = run_rewire_suite(10000, 42, 9, {}, 1e-9);
  for (const auto& f : r.failures) std::fprintf(stderr, "  rewire %s %s: %s\n", f.graph6.c_str(), f.spec.c_str(), f.reason.c_str());
  return {r.failures.empty(),
          fmt("%llu instances: %llu pass, %llu premise not met, %llu skipped, max quad residual %.2e",
              static_cast<unsigned long long>(r.trials), static_cast<unsigned long long>(r.passed),
              static_cast<unsigned long long>(r.premise_not_met), static_cast<unsigned long long>(r.skipped),
              r.max_quad_form_residual)};
}

Outcome corollary() {
  const RewireSuiteReport r = run_corollary_suite(10000, 43, 9);
  for (const auto& f : r.failures) std::fprintf(stderr, "  corollary %s %s: %s\n", f.graph6.c_str(), f.spec.c_str(), f.reason.c_str());
  return {r.failures.empty() && r.passed == 10000,
          fmt("%llu premise-satisfying instances, %zu failures", static_cast<unsigned long long>(r.trials),
              r.failures.size())};
}

Outcome lemma() {
  std::uint64_t premise = 0, counter = 0;
  for (int n = 3; n <= 7; ++n)
    for (int k = 1; k <= n - 2; ++k) {
      const LemmaReport r = verify_lemma(n, k);
      premise += r.premise_count;
      counter += r.counterexamples.size();
      for (const Graph& g : r.counterexamples) std::fprintf(stderr, "  lemma (%d,%d): %s\n", n, k, g6_encode(g).c_str());
    }
  return {counter == 0, fmt("%llu premise graphs, %llu counterexamples", static_cast<unsigned long long>(premise),
                            static_cast<unsigned long long>(counter))};
}

Outcome subgraph_strictness() {
  std::mt19937_64 rng(7001);
  int pairs = 0, bad = 0;
  double min_gap = 1e300;
  while (pairs < 1000) {
    const Graph g = connected_random(rng, 3 + static_cast<int>(rng() % 8), 0.3 + 0.6 * (rng() % 100) / 100.0);
    Graph h = g;
    // Delete a random number of edges and possibly a vertex.
    const int drops = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < drops; ++i) {
      const auto e = h.edges();
      if (e.empty()) break;
      const auto [u, v] = e[rng() % e.size()];
      h.remove_edge(u, v);
    }
    if (rng() % 3 == 0 && h.order() > 2) {
      const std::vector<int> drop{static_cast<int>(rng() % h.order())};
      h = delete_vertices(h, drop);
    }
    if (!is_connected(h)) continue;
    ++pairs;
    const double gap = perron(g).rho - perron(h).rho;
    min_gap = std::min(min_gap, gap);
    if (!(gap > 1e-12)) ++bad;
  }
  return {bad == 0, fmt("%d pairs, min gap %.3e, %d failures", pairs, min_gap, bad)};
}

Outcome interlacing() {
  std::mt19937_64 rng(8001);
  int bad = 0;
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    const int m = 1 + static_cast<int>(rng() % n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Partition part;
    part.blocks.resize(m);
    for (int i = 0; i < n; ++i) part.blocks[i < m ? i : rng() % m].push_back(perm[i]);
    if (!check_interlacing(quotient_spectrum(quotient_matrix(g, part)), full_spectrum(adjacency_matrix(g)), 1e-9)) ++bad;
  }
  std::uint64_t grid = 0, unequal = 0;
  double max_err = 0.0;
  for (const ExtremalParams& p : extremal_grid(3, 200)) {
    const Graph g = extremal_graph(p);
    const Partition part = canonical_partition(p);
    const double err = std::abs(quotient_spectrum(quotient_matrix(g, part)).largest() - perron(g).rho);
    max_err = std::max(max_err, err);
    ++grid;
    if (!is_equitable(g, part) || err > 1e-9) ++unequal;
  }
  return {bad == 0 && unequal == 0,
          fmt("1000 random partitions, %d interlacing failures; %llu equitable partitions, max |lambda1 diff| %.2e, "
              "%llu failures",
              bad, static_cast<unsigned long long>(grid), max_err, static_cast<unsigned long long>(unequal))};
}

Outcome solver_sanity() {
  double kn_err = 0.0;
  for (int n = 1; n <= 64; ++n) kn_err = std::max(kn_err, std::abs(perron(complete(n)).rho - (n - 1)));
  std::mt19937_64 rng(9001);
  double max_diff = 0.0;
  int nonpositive = 0;
  for (int t = 0; t < 1000; ++t) {
    const Graph g = connected_random(rng, 2 + static_cast<int>(rng() % 40), 0.15 + 0.7 * (rng() % 100) / 100.0);
    const PerronPair pp = perron(g);
    max_diff = std::max(max_diff, std::abs(pp.rho - full_spectrum(adjacency_matrix(g)).largest()));
    for (double x : pp.vec)
      if (!(x > 0.0)) {
        ++nonpositive;
        break;
      }
  }
  return {kn_err <= 1e-12 && max_diff <= 1e-9 && nonpositive == 0,
          fmt("K_n max error %.2e; 1000 graphs, max |power - jacobi| %.2e, %d non-positive vectors", kn_err, max_diff,
              nonpositive)};
}

Outcome determinism() {
  int mismatches = 0;
  auto dump_all = [](int n, unsigned shards) {
    CensusOptions o;
    o.shards = shards;
    std::string out;
    const auto grid = main_grid_classes(n);
    for (const CensusResult& r : run_census_batch(n, grid, o)) out += to_json(r).dump() + "\n";
    return out;
  };
  CensusOptions one;
  const std::string ref = to_json(run_census(ClassSpec::make(7, 2, 3), one)).dump();
  const std::string ref6 = dump_all(6, 1);
  for (unsigned shards : {4u, 16u}) {
    CensusOptions o;
    o.shards = shards;
    if (to_json(run_census(ClassSpec::make(7, 2, 3), o)).dump() != ref) ++mismatches;
    if (dump_all(6, shards) != ref6) ++mismatches;
  }
  std::uint64_t round_trips = 0, g6_bad = 0;
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      const Graph g = Graph::from_upper_mask(n, mask);
      ++round_trips;
      if (!(g6_decode(g6_encode(g)) == g)) ++g6_bad;
    }
  return {mismatches == 0 && g6_bad == 0,
          fmt("shards {1,4,16}: %d census mismatches; %llu graph6 round trips, %llu failures", mismatches,
              static_cast<unsigned long long>(round_trips), static_cast<unsigned long long>(g6_bad))};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"AC1 main census n=4..7", main_census},
      {"AC2 kappa-only census n=4..7", unconstrained_census},
      {"AC3 cubic formula n<=200", cubic_formula},
      {"AC4 rewiring theorem 1e4", rewiring},
      {"AC5 corollary 1e4", corollary},
      {"AC6 connectivity lemma n<=7", lemma},
      {"AC7 subgraph strictness 1e3", subgraph_strictness},
      {"AC8 interlacing", interlacing},
      {"AC9 solver sanity", solver_sanity},
      {"AC10 determinism", determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %s: %s (%.1fs)\n", o.ok ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}

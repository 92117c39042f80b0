#include "specgraph/suites.hpp"

#include <algorithm>
#include <cmath>

#include "specgraph/graph6.hpp"
#include "specgraph/spectral.hpp"

namespace specgraph {

std::vector<ClassSpec> main_grid_classes(int n) {
  std::vector<ClassSpec> out;
  for (int delta = 1; delta <= n - 2; ++delta)
    for (int k = 1; k <= delta; ++k)
      if (n >= 2 * delta + 2 - k) out.push_back(ClassSpec{n, k, delta});
  return out;
}

std::vector<ExtremalParams> extremal_grid(int n_min, int n_max, bool realizing_only) {
  std::vector<ExtremalParams> out;
  for (int n = std::max(n_min, 3); n <= n_max; ++n)
    for (int k = 1; k <= n - 2; ++k)
      for (int delta = k; delta <= n - 2; ++delta) {
        ExtremalParams p{n, k, delta};
        if (!realizing_only || p.realizes_min_degree()) out.push_back(p);
      }
  return out;
}

CubicCheck check_cubic(const ExtremalParams& p, double root_tol) {
  CubicCheck c;
  c.params = p;
  c.formula = cubic_coefficients(p);
  const QuotientMatrix closed = three_part_quotient(p);
  c.quotient_charpoly = integer_charpoly(closed.integer_entries());
  c.coefficients_match = c.quotient_charpoly == c.formula.poly();

  const Graph g = extremal_graph(p);
  const QuotientMatrix built = quotient_matrix(g, canonical_partition(p));
  c.quotient_matches_graph = built.sizes == closed.sizes && built.edge_counts == closed.edge_counts;

  c.cubic_root = largest_cubic_root(c.formula);
  c.rho = perron(g).rho;
  c.root_matches = std::abs(c.cubic_root - c.rho) <= root_tol;
  return c;
}

CubicGridReport verify_cubic_grid(int n_min, int n_max, double root_tol) {
  CubicGridReport r;
  for (const auto& p : extremal_grid(n_min, n_max)) {
    CubicCheck c = check_cubic(p, root_tol);
    ++r.triples;
    r.max_root_error = std::max(r.max_root_error, std::abs(c.cubic_root - c.rho));
    if (!c.ok()) r.failures.push_back(std::move(c));
  }
  return r;
}

RewireSuiteReport run_rewire_suite(std::uint64_t trials, std::uint64_t seed, int max_order,
                                   const RewireTolerances& tol, double quad_tol) {
  RewireSuiteReport r;
  std::mt19937_64 rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const RewireInstance inst = sample_rewire_instance(rng, max_order);
    const MonotonicityReport m = verify_monotonicity(inst.graph, inst.spec, tol);
    ++r.trials;
    r.max_quad_form_residual = std::max(r.max_quad_form_residual, m.quad_form_residual);
    std::string reason = m.reason;
    bool failed = m.verdict == Verdict::fail;
    if (m.quad_form_residual > quad_tol) {
      failed = true;
      reason = "quadratic-form identity residual " + std::to_string(m.quad_form_residual);
    }
    if (failed) {
      r.failures.push_back({g6_encode(inst.graph), inst.spec.encode(), reason});
    } else if (m.verdict == Verdict::skip) {
      ++r.skipped;
    } else if (m.verdict == Verdict::premise_not_met) {
      ++r.premise_not_met;
    } else {
      ++r.passed;
    }
  }
  return r;
}

RewireSuiteReport run_corollary_suite(std::uint64_t trials, std::uint64_t seed, int max_order,
                                      const RewireTolerances& tol) {
  RewireSuiteReport r;
  std::mt19937_64 rng(seed);
  while (r.trials < trials) {
    const RewireInstance inst = sample_rewire_instance(rng, max_order);
    const CorollaryReport c = corollary_check(inst.graph, inst.spec, tol);
    if (c.verdict == Verdict::premise_not_met) {
      ++r.premise_not_met;
      continue;
    }
    if (c.verdict == Verdict::skip) {
      ++r.skipped;
      continue;
    }
    ++r.trials;
    if (c.verdict == Verdict::fail) {
      r.failures.push_back({g6_encode(inst.graph), inst.spec.encode(), c.reason});
    } else {
      ++r.passed;
    }
  }
  return r;
}

}  // namespace specgraph

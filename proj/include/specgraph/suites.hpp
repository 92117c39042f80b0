#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specgraph/census.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/quotient.hpp"
#include "specgraph/rewiring.hpp"

namespace specgraph {

/// Parameter triples of the main census grid at order n: 1 <= k <= delta <= n-2
/// and n >= 2 delta + 2 - k.
std::vector<ClassSpec> main_grid_classes(int n);

/// Hard-valid extremal triples with n_min <= n <= n_max.
std::vector<ExtremalParams> extremal_grid(int n_min, int n_max, bool realizing_only = false);

struct CubicCheck {
  ExtremalParams params;
  CubicCoeffs formula;
  IntPoly quotient_charpoly;
  double cubic_root = 0.0;
  double rho = 0.0;
  bool coefficients_match = false;
  bool quotient_matches_graph = false;
  bool root_matches = false;
  bool ok() const { return coefficients_match && quotient_matches_graph && root_matches; }
};

/// Formula cubic vs det(xI - Q), closed-form Q vs the quotient of the built
/// graph, and the largest cubic root vs the Perron root within root_tol.
CubicCheck check_cubic(const ExtremalParams& p, double root_tol = 1e-9);

struct CubicGridReport {
  std::uint64_t triples = 0;
  double max_root_error = 0.0;
  std::vector<CubicCheck> failures;
};

CubicGridReport verify_cubic_grid(int n_min, int n_max, double root_tol = 1e-9);

struct RewireFailure {
  std::string graph6;
  std::string spec;
  std::string reason;
};

struct RewireSuiteReport {
  std::uint64_t trials = 0;
  std::uint64_t passed = 0;
  std::uint64_t skipped = 0;
  std::uint64_t premise_not_met = 0;
  double max_quad_form_residual = 0.0;
  std::vector<RewireFailure> failures;
};

/// `trials` random instances on at most max_order vertices from a fixed seed.
/// A quadratic-form residual above quad_tol counts as a failure.
RewireSuiteReport run_rewire_suite(std::uint64_t trials, std::uint64_t seed, int max_order = 9,
                                   const RewireTolerances& tol = {}, double quad_tol = 1e-9);

/// Samples until `trials` premise-satisfying instances have been checked.
RewireSuiteReport run_corollary_suite(std::uint64_t trials, std::uint64_t seed, int max_order = 9,
                                      const RewireTolerances& tol = {});

}  // namespace specgraph

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

/// Move edges at a pivot: drop v-d for d in del_set, add v-a for a in add_set.
struct RewireSpec {
  int pivot = 0;
  std::vector<int> del_set;
  std::vector<int> add_set;

  /// Throws std::invalid_argument naming the first violated condition.
  void validate(const Graph& g) const;
  RewireSpec inverse() const { return {pivot, add_set, del_set}; }
  /// "v|d1,d2|a1,a2"
  std::string encode() const;
  static RewireSpec decode(const std::string& text);
};

Graph rewire(const Graph& g, const RewireSpec& s);

enum class Relation { lt, eq, gt };
const char* to_string(Relation r);

struct PerronSums {
  double sum_del = 0.0;
  double sum_add = 0.0;
  Relation relation = Relation::eq;
};

/// Perron-vector mass of g on del_set and add_set; "eq" when within `tol`.
PerronSums perron_sum_test(const Graph& g, const RewireSpec& s, double tol = 1e-10);

enum class Verdict { pass, fail, skip, premise_not_met };
const char* to_string(Verdict v);

struct RewireTolerances {
  /// Non-strict conclusion slack: rho(G) <= rho(G*) + weak.
  double weak = 1e-10;
  /// Premise margin beyond which strictness is demanded.
  double premise_margin = 1e-8;
  /// Strict conclusion gap: rho(G) < rho(G*) - strict.
  double strict = 1e-12;
};

struct MonotonicityReport {
  double rho_before = 0.0;
  double rho_after = 0.0;
  double sum_del = 0.0;
  double sum_add = 0.0;
  /// |x^T (A(G*) - A(G)) x - 2 x_v (sum_add - sum_del)| for g's Perron vector x.
  double quad_form_residual = 0.0;
  Verdict verdict = Verdict::skip;
  std::string reason;
};

/// Checks: sum_del <= sum_add implies rho(G) <= rho(G*), strictly when the
/// premise holds with margin. Rewired graphs that are disconnected are skipped.
MonotonicityReport verify_monotonicity(const Graph& g, const RewireSpec& s, const RewireTolerances& tol = {});

struct CorollaryReport {
  double sum_del_before = 0.0;
  double sum_add_before = 0.0;
  double sum_del_after = 0.0;
  double sum_add_after = 0.0;
  Verdict verdict = Verdict::skip;
  std::string reason;
};

/// With premise sum_del <= sum_add on g, the Perron vector y of the rewired
/// graph keeps sum_add(y) >= sum_del(y), strictly if the premise was strict.
CorollaryReport corollary_check(const Graph& g, const RewireSpec& s, const RewireTolerances& tol = {});

struct RewireInstance {
  Graph graph;
  RewireSpec spec;
};

/// Random connected graph on 3..max_order vertices with a random valid spec
/// whose rewired graph is connected.
RewireInstance sample_rewire_instance(std::mt19937_64& rng, int max_order);

/// Uniform random connected graph on n vertices (rejection from G(n, p)).
Graph random_connected_graph(std::mt19937_64& rng, int n, double edge_prob);

}  // namespace specgraph

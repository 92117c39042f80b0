#pragma once

#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

/// A minimum vertex cut and the components left after removing it.
struct CutWitness {
  std::vector<int> cut;
  std::vector<std::vector<int>> side_components;
};

struct Connectivity {
  int kappa = 0;
  /// True for complete graphs, which have no vertex cut; witness is empty.
  bool complete = false;
  CutWitness witness;
};

/// kappa(G) via unit-capacity max-flow on the vertex-split digraph. Only the
/// pairs needed by the Esfahanian-Hakimi reduction are flowed: a minimum
/// degree vertex u against its non-neighbours, then non-adjacent neighbour
/// pairs of u.
Connectivity vertex_connectivity(const Graph& g);

/// Same value without building a witness. Stops early once kappa <= floor is
/// certain, returning a value <= floor in that case.
int connectivity_number(const Graph& g, int floor = -1);

/// Maximum number of internally vertex-disjoint s-t paths; s, t non-adjacent.
int vertex_disjoint_paths(const Graph& g, int s, int t);

/// true iff g = K_{k+1}, or g has at least k+2 vertices and kappa(g) >= k.
bool is_k_connected(const Graph& g, int k);

/// delta > (n + k)/2 + 1, in exact integer arithmetic.
constexpr bool lemma_guarantee(long n, long k, long delta) { return 2 * delta > n + k + 2; }

}  // namespace specgraph

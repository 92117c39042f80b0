#pragma once

#include <optional>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

/// Order limit for the backtracking search.
constexpr int kIsomorphismMaxOrder = 10;

/// A bijection phi with g.adjacent(u, v) == h.adjacent(phi[u], phi[v]), if one
/// exists. Vertices are matched only within equal (degree, sorted neighbour
/// degrees) classes, and each partial map is checked against all previously
/// mapped vertices. Throws std::invalid_argument beyond kIsomorphismMaxOrder.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace specgraph

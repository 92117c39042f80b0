#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace specgraph {

using Edge = std::pair<int, int>;

/// Malformed textual or graph6 input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph stored as a dense symmetric bit matrix.
///
/// Row v holds the neighbourhood of v packed into 64-bit words. Vertex ids are
/// dense in [0, order()). Self-loops and parallel edges are not representable.
class Graph {
 public:
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);

  /// Builds a graph from a packed upper-triangle mask. Bit j*(j-1)/2 + i is
  /// the pair (i, j), i < j; this is the graph6 bit order.
  static Graph from_upper_mask(int n, std::uint64_t mask);

  int order() const noexcept { return n_; }
  int words_per_row() const noexcept { return words_; }

  bool adjacent(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  /// Adds every edge u-v with u in [r0, r1), v in [c0, c1), u != v.
  void connect_ranges(int r0, int r1, int c0, int c1);
  /// ORs the adjacency of h into this graph with vertex ids shifted by offset.
  void overlay(const Graph& h, int offset);

  int degree(int v) const;
  std::size_t edge_count() const;
  std::vector<int> neighbors(int v) const;
  std::vector<Edge> edges() const;

  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }

  /// Inverse of from_upper_mask; requires order() <= 11.
  std::uint64_t upper_mask() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;
  void set_bit(int u, int v, bool on);

  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
};

/// (n, k, delta) for the graph K_k + (K_{delta-k+1} u K_{n-delta-1}).
struct ExtremalParams {
  int n = 0;
  int k = 0;
  int delta = 0;

  /// Throws std::invalid_argument naming the violated inequality.
  static ExtremalParams make(int n, int k, int delta);

  void validate() const;
  int join_size() const noexcept { return k; }
  int small_clique() const noexcept { return delta - k + 1; }
  int large_clique() const noexcept { return n - delta - 1; }
  /// True iff the constructed graph has minimum degree exactly delta.
  bool realizes_min_degree() const noexcept { return n >= 2 * delta + 2 - k; }

  friend bool operator==(const ExtremalParams&, const ExtremalParams&) = default;
};

Graph complete(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

/// G_{k,delta,n}. Vertices [0,k) form the join block S, the next delta-k+1 form
/// clique A and the last n-delta-1 form clique B.
Graph extremal_graph(const ExtremalParams& p);

/// K_k + (K_1 u K_{n-k-1}); requires 1 <= k <= n-1.
Graph shiu_graph(int n, int k);

int min_degree(const Graph& g);
int max_degree(const Graph& g);
std::vector<int> degree_sequence(const Graph& g);
bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
/// Removes the listed vertices; the rest keep their relative order.
Graph delete_vertices(const Graph& g, std::span<const int> vertices);

/// Plain-text edge list: one "u v" pair per line, 0-indexed. '#' starts a
/// comment. An optional line holding a single integer fixes the order,
/// otherwise the order is one more than the largest id seen.
Graph read_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

}  // namespace specgraph

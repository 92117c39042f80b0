#pragma once

#include <span>
#include <vector>

#include "specgraph/graph.hpp"
#include "specgraph/poly.hpp"
#include "specgraph/spectral.hpp"

namespace specgraph {

/// Ordered blocks of vertices. Quotient rows follow block order.
struct Partition {
  std::vector<std::vector<int>> blocks;

  /// Throws std::invalid_argument unless the blocks are nonempty, disjoint and cover [0, n).
  void validate(int n) const;
  std::vector<int> sizes() const;
};

/// (S, A, B) layout of extremal_graph(p).
Partition canonical_partition(const ExtremalParams& p);

/// True iff every vertex of block i has the same number of neighbours in block j, for all i, j.
bool is_equitable(const Graph& g, const Partition& p);

/// Quotient of a partition: q[i][j] = e_ij / n_i off the diagonal and
/// q[i][i] = 2 e_i / n_i, where e_ij counts edges between blocks i and j and
/// e_i edges inside block i.
struct QuotientMatrix {
  std::vector<long long> sizes;
  /// edge_counts[i][j] = e_ij for i != j, edge_counts[i][i] = e_i.
  std::vector<std::vector<long long>> edge_counts;
  DenseMatrix q;

  int blocks() const { return static_cast<int>(sizes.size()); }
  /// Row-sum numerators n_i * q[i][j]; exact integers.
  long long scaled_entry(int i, int j) const { return i == j ? 2 * edge_counts[i][i] : edge_counts[i][j]; }
  bool is_integral() const;
  /// Integer entries; throws std::domain_error unless is_integral().
  std::vector<std::vector<long long>> integer_entries() const;
  /// D^{1/2} Q D^{-1/2}: symmetric, same spectrum as q.
  DenseMatrix symmetrized() const;
};

QuotientMatrix quotient_matrix(const Graph& g, const Partition& p);

/// Closed form of the quotient of the canonical partition of G_{k,delta,n}:
/// [[k-1, delta-k+1, n-delta-1], [k, delta-k, 0], [k, 0, n-delta-2]].
QuotientMatrix three_part_quotient(const ExtremalParams& p);

/// Quotient of K_k + (K_{n1} u K_{n2}) over (S, G1, G2):
/// [[k-1, n1, n2], [k, n1-1, 0], [k, 0, n2-1]].
QuotientMatrix two_clique_quotient(int k, int n1, int n2);

Spectrum quotient_spectrum(const QuotientMatrix& qm);

/// Block-constant extension of per-block values to a vertex vector.
std::vector<double> lift(const Partition& p, std::span<const double> block_values, int n);

/// x^3 + c2 x^2 + c1 x + c0.
struct CubicCoeffs {
  long long c2 = 0;
  long long c1 = 0;
  long long c0 = 0;

  IntPoly poly() const;
  friend bool operator==(const CubicCoeffs&, const CubicCoeffs&) = default;
};

/// The closed-form cubic whose largest root is rho(G_{k,delta,n}).
CubicCoeffs cubic_coefficients(const ExtremalParams& p);

/// Largest real root to 1e-12 absolute. Exact Sturm isolation, double Newton
/// inside the isolating interval, then an exact sign check of the final bracket.
double largest_cubic_root(const CubicCoeffs& c);

/// lambda_i(full) >= lambda_i(sub) >= lambda_{i+n-m}(full) for i = 1..m in
/// descending order, within `slack`. Throws std::invalid_argument if m > n.
bool check_interlacing(const Spectrum& sub, const Spectrum& full, double slack = 1e-9);

}  // namespace specgraph

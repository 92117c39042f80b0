#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "specgraph/graph.hpp"
#include "specgraph/poly.hpp"

namespace specgraph {

/// Row-major dense real matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double frobenius_norm() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix adjacency_matrix(const Graph& g);

/// Spectral radius with its unit Perron vector.
struct PerronPair {
  double rho = 0.0;
  std::vector<double> vec;
  long iterations = 0;
  /// ||A vec - rho vec||_inf on the full graph.
  double residual = 0.0;
};

struct PerronOptions {
  /// Rayleigh-quotient step tolerance, relative to max(1, rho).
  double tol = 1e-13;
  /// Residual acceptance, relative to max(1, rho).
  double residual_tol = 1e-10;
  long max_iterations = 1'000'000;
  /// Iterate on the quotient of the twin partition. The iterates from the
  /// all-ones start stay constant on twin classes, so this changes cost only.
  bool reduce_twins = true;
};

class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, double residual, long iterations)
      : std::runtime_error(what), residual_(residual), iterations_(iterations) {}
  double residual() const noexcept { return residual_; }
  long iterations() const noexcept { return iterations_; }

 private:
  double residual_;
  long iterations_;
};

/// Power iteration on A + I from the all-ones direction. The shift removes the
/// period-2 oscillation of bipartite graphs and leaves the Perron vector
/// unchanged. Throws std::invalid_argument on disconnected input and
/// NonConvergence when the cap is hit.
PerronPair perron(const Graph& g, const PerronOptions& opts = {});

/// Eigenvalues in ascending order.
struct Spectrum {
  std::vector<double> eigs;
  double largest() const { return eigs.back(); }
  double smallest() const { return eigs.front(); }
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius mass is at most
/// 1e-12 of the matrix norm. Rejects matrices asymmetric beyond 1e-12.
Spectrum full_spectrum(const DenseMatrix& m);

/// y^T A y for the adjacency matrix of g.
double quadratic_form(const Graph& g, std::span<const double> y);

/// ||A x - lambda x||_inf.
double eigen_residual(const Graph& g, std::span<const double> x, double lambda);

/// Characteristic polynomial det(xI - A) of an integer square matrix by the
/// Faddeev-LeVerrier recurrence in exact arithmetic.
IntPoly integer_charpoly(const std::vector<std::vector<long long>>& m);

constexpr int kCharpolyMaxOrder = 32;

/// det(xI - A(g)); throws std::invalid_argument beyond kCharpolyMaxOrder.
IntPoly int_charpoly(const Graph& g);

enum class RhoOrder { less, equal_root, equal_poly, greater };

const char* to_string(RhoOrder o);

/// Exact comparison of rho(g) and rho(h) through their characteristic
/// polynomials. equal_poly: identical polynomials; equal_root: different
/// polynomials sharing the largest root.
RhoOrder exact_compare_rho(const Graph& g, const Graph& h);
RhoOrder compare_charpoly_roots(const IntPoly& p, const IntPoly& q);

}  // namespace specgraph

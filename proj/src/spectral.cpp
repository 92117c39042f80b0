#include "specgraph/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace specgraph {

double DenseMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

DenseMatrix adjacency_matrix(const Graph& g) {
  DenseMatrix a(g.order(), g.order());
  for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
  return a;
}

namespace {

/// Equitable partition into twin classes: vertices with equal closed
/// neighbourhoods, then remaining singletons with equal open neighbourhoods.
struct TwinQuotient {
  std::vector<int> class_of;
  std::vector<double> size;
  std::vector<double> counts;  // m x m, row i = neighbours of a class-i vertex in class j
  int m = 0;
};

bool row_less(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t w = a.size(); w-- > 0;)
    if (a[w] != b[w]) return a[w] < b[w];
  return false;
}

TwinQuotient twin_quotient(const Graph& g) {
  const int n = g.order();
  const int words = g.words_per_row();
  std::vector<std::uint64_t> closed(static_cast<std::size_t>(n) * words);
  for (int v = 0; v < n; ++v) {
    auto r = g.row(v);
    std::copy(r.begin(), r.end(), closed.begin() + static_cast<std::ptrdiff_t>(v) * words);
    closed[static_cast<std::size_t>(v) * words + v / 64] |= std::uint64_t{1} << (v % 64);
  }
  auto closed_row = [&](int v) {
    return std::span<const std::uint64_t>(closed.data() + static_cast<std::size_t>(v) * words, words);
  };

  TwinQuotient q;
  q.class_of.assign(n, -1);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return row_less(closed_row(a), closed_row(b)); });
  std::vector<int> singletons;
  for (int i = 0; i < n;) {
    int j = i + 1;
    while (j < n && std::ranges::equal(closed_row(order[i]), closed_row(order[j]))) ++j;
    if (j - i == 1) {
      singletons.push_back(order[i]);
    } else {
      for (int t = i; t < j; ++t) q.class_of[order[t]] = q.m;
      ++q.m;
    }
    i = j;
  }
  std::sort(singletons.begin(), singletons.end(), [&](int a, int b) { return row_less(g.row(a), g.row(b)); });
  for (std::size_t i = 0; i < singletons.size();) {
    std::size_t j = i + 1;
    while (j < singletons.size() && std::ranges::equal(g.row(singletons[i]), g.row(singletons[j]))) ++j;
    for (std::size_t t = i; t < j; ++t) q.class_of[singletons[t]] = q.m;
    ++q.m;
    i = j;
  }

  std::vector<std::uint64_t> masks(static_cast<std::size_t>(q.m) * words, 0);
  std::vector<int> rep(q.m, -1);
  q.size.assign(q.m, 0.0);
  for (int v = 0; v < n; ++v) {
    const int c = q.class_of[v];
    masks[static_cast<std::size_t>(c) * words + v / 64] |= std::uint64_t{1} << (v % 64);
    q.size[c] += 1.0;
    if (rep[c] < 0) rep[c] = v;
  }
  q.counts.assign(static_cast<std::size_t>(q.m) * q.m, 0.0);
  for (int i = 0; i < q.m; ++i) {
    auto r = g.row(rep[i]);
    for (int j = 0; j < q.m; ++j) {
      int c = 0;
      for (int w = 0; w < words; ++w) c += std::popcount(r[w] & masks[static_cast<std::size_t>(j) * words + w]);
      q.counts[static_cast<std::size_t>(i) * q.m + j] = c;
    }
  }
  return q;
}

TwinQuotient identity_quotient(const Graph& g) {
  TwinQuotient q;
  q.m = g.order();
  q.class_of.resize(q.m);
  std::iota(q.class_of.begin(), q.class_of.end(), 0);
  q.size.assign(q.m, 1.0);
  q.counts.assign(static_cast<std::size_t>(q.m) * q.m, 0.0);
  for (auto [u, v] : g.edges()) q.counts[static_cast<std::size_t>(u) * q.m + v] = q.counts[static_cast<std::size_t>(v) * q.m + u] = 1.0;
  return q;
}

}  // namespace

double quadratic_form(const Graph& g, std::span<const double> y) {
  if (static_cast<int>(y.size()) != g.order()) throw std::invalid_argument("quadratic_form: vector length mismatch");
  double s = 0.0;
  for (auto [u, v] : g.edges()) s += 2.0 * y[u] * y[v];
  return s;
}

double eigen_residual(const Graph& g, std::span<const double> x, double lambda) {
  if (static_cast<int>(x.size()) != g.order()) throw std::invalid_argument("eigen_residual: vector length mismatch");
  double worst = 0.0;
  for (int v = 0; v < g.order(); ++v) {
    double ax = 0.0;
    auto r = g.row(v);
    for (int w = 0; w < g.words_per_row(); ++w) {
      std::uint64_t word = r[w];
      while (word) {
        ax += x[w * 64 + std::countr_zero(word)];
        word &= word - 1;
      }
    }
    worst = std::max(worst, std::abs(ax - lambda * x[v]));
  }
  return worst;
}

PerronPair perron(const Graph& g, const PerronOptions& opts) {
  const int n = g.order();
  if (!is_connected(g)) throw std::invalid_argument("perron: graph is disconnected; decompose into components first");
  if (n == 1) return {0.0, {1.0}, 0, 0.0};

  const TwinQuotient q = opts.reduce_twins ? twin_quotient(g) : identity_quotient(g);
  const int m = q.m;
  std::vector<double> x(m, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> cx(m);

  auto apply = [&] {
    for (int i = 0; i < m; ++i) {
      double s = 0.0;
      const double* row = q.counts.data() + static_cast<std::size_t>(i) * m;
      for (int j = 0; j < m; ++j) s += row[j] * x[j];
      cx[i] = s;
    }
  };
  // Rayleigh quotient and residual of the lifted vector, from quotient data.
  auto rayleigh = [&] {
    double num = 0.0, den = 0.0;
    for (int i = 0; i < m; ++i) {
      num += q.size[i] * x[i] * cx[i];
      den += q.size[i] * x[i] * x[i];
    }
    return num / den;
  };
  auto residual = [&](double rho) {
    double r = 0.0;
    for (int i = 0; i < m; ++i) r = std::max(r, std::abs(cx[i] - rho * x[i]));
    return r;
  };

  apply();
  double rho = rayleigh();
  double res = residual(rho);
  long it = 0;
  for (; it < opts.max_iterations; ++it) {
    double norm2 = 0.0;
    for (int i = 0; i < m; ++i) {
      x[i] += cx[i];
      norm2 += q.size[i] * x[i] * x[i];
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& v : x) v *= inv;
    apply();
    const double next = rayleigh();
    const double step = std::abs(next - rho);
    const double scale = std::max(1.0, rho);
    rho = next;
    res = residual(rho);
    if (step <= opts.tol * scale && res <= opts.residual_tol * std::max(1.0, rho)) break;
  }
  if (it == opts.max_iterations)
    throw NonConvergence("perron: no convergence after " + std::to_string(it) + " iterations, residual " +
                             std::to_string(res),
                         res, it);

  PerronPair out;
  out.rho = rho;
  out.iterations = it + 1;
  out.vec.resize(n);
  for (int v = 0; v < n; ++v) out.vec[v] = x[q.class_of[v]];
  double norm2 = 0.0;
  for (double v : out.vec) norm2 += v * v;
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& v : out.vec) v *= inv;
  out.residual = eigen_residual(g, out.vec, out.rho);
  if (out.residual > opts.residual_tol * std::max(1.0, out.rho))
    throw NonConvergence("perron: lifted vector fails the full residual check", out.residual, out.iterations);
  return out;
}

Spectrum full_spectrum(const DenseMatrix& input) {
  const int n = input.rows();
  if (n != input.cols()) throw std::invalid_argument("full_spectrum: matrix is not square");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(input(i, j) - input(j, i)) > 1e-12)
        throw std::invalid_argument("full_spectrum: matrix is not symmetric at (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ")");

  DenseMatrix a = input;
  const double target = 1e-12 * a.frobenius_norm();
  auto off = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps && off() > target; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int r = p + 1; r < n; ++r) {
        const double apr = a(p, r);
        if (apr == 0.0) continue;
        const double theta = (a(r, r) - a(p, p)) / (2.0 * apr);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akr = a(k, r);
          a(k, p) = c * akp - s * akr;
          a(k, r) = s * akp + c * akr;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double ark = a(r, k);
          a(p, k) = c * apk - s * ark;
          a(r, k) = s * apk + c * ark;
        }
      }
    }
  }
  if (sweep == kMaxSweeps && off() > target)
    throw NonConvergence("full_spectrum: Jacobi sweeps exhausted", off(), sweep);

  Spectrum out;
  out.eigs.resize(n);
  for (int i = 0; i < n; ++i) out.eigs[i] = a(i, i);
  std::sort(out.eigs.begin(), out.eigs.end());
  return out;
}

IntPoly integer_charpoly(const std::vector<std::vector<long long>>& m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("integer_charpoly: matrix is not square");
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
  std::vector<BigInt> mk(static_cast<std::size_t>(n) * n, 0), next(mk.size());
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        BigInt s = 0;
        for (int t = 0; t < n; ++t)
          if (m[i][t] != 0) s += m[i][t] * mk[static_cast<std::size_t>(t) * n + j];
        next[static_cast<std::size_t>(i) * n + j] = std::move(s);
      }
      next[static_cast<std::size_t>(i) * n + i] += c[n - k + 1];
    }
    mk.swap(next);
    BigInt trace = 0;
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < n; ++t)
        if (m[i][t] != 0) trace += m[i][t] * mk[static_cast<std::size_t>(t) * n + i];
    c[n - k] = -trace / k;
  }
  return IntPoly(std::move(c));
}

IntPoly int_charpoly(const Graph& g) {
  const int n = g.order();
  if (n > kCharpolyMaxOrder)
    throw std::invalid_argument("int_charpoly: order " + std::to_string(n) + " exceeds cap " +
                                std::to_string(kCharpolyMaxOrder));
  // Adjacency rows are 0/1, so A * M is a sum of rows of M.
  std::vector<std::vector<int>> nbr(n);
  for (int v = 0; v < n; ++v) nbr[v] = g.neighbors(v);
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  std::vector<BigInt> mk(static_cast<std::size_t>(n) * n, 0), next(mk.size());
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        BigInt s = 0;
        for (int t : nbr[i]) s += mk[static_cast<std::size_t>(t) * n + j];
        next[static_cast<std::size_t>(i) * n + j] = std::move(s);
      }
      next[static_cast<std::size_t>(i) * n + i] += c[n - k + 1];
    }
    mk.swap(next);
    BigInt trace = 0;
    for (int i = 0; i < n; ++i)
      for (int t : nbr[i]) trace += mk[static_cast<std::size_t>(t) * n + i];
    c[n - k] = -trace / k;
  }
  return IntPoly(std::move(c));
}

const char* to_string(RhoOrder o) {
  switch (o) {
    case RhoOrder::less: return "less";
    case RhoOrder::equal_root: return "equal_root";
    case RhoOrder::equal_poly: return "equal_poly";
    case RhoOrder::greater: return "greater";
  }
  return "?";
}

RhoOrder compare_charpoly_roots(const IntPoly& p, const IntPoly& q) {
  if (p == q) return RhoOrder::equal_poly;
  switch (compare_largest_roots(p, q)) {
    case RootOrder::less: return RhoOrder::less;
    case RootOrder::greater: return RhoOrder::greater;
    case RootOrder::equal: return RhoOrder::equal_root;
  }
  return RhoOrder::equal_root;
}

RhoOrder exact_compare_rho(const Graph& g, const Graph& h) {
  if (!is_connected(g) || !is_connected(h)) throw std::invalid_argument("exact_compare_rho: both graphs must be connected");
  return compare_charpoly_roots(int_charpoly(g), int_charpoly(h));
}

}  // namespace specgraph

#include "specgraph/quotient.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace specgraph {

void Partition::validate(int n) const {
  std::vector<char> seen(n, 0);
  int covered = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("partition block " + std::to_string(b) + " is empty");
    for (int v : blocks[b]) {
      if (v < 0 || v >= n) throw std::invalid_argument("partition vertex " + std::to_string(v) + " out of range");
      if (seen[v]) throw std::invalid_argument("partition blocks overlap at vertex " + std::to_string(v));
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != n) throw std::invalid_argument("partition does not cover every vertex");
}

std::vector<int> Partition::sizes() const {
  std::vector<int> out;
  for (const auto& b : blocks) out.push_back(static_cast<int>(b.size()));
  return out;
}

Partition canonical_partition(const ExtremalParams& p) {
  p.validate();
  Partition out;
  out.blocks.resize(3);
  int v = 0;
  for (int i = 0; i < p.join_size(); ++i) out.blocks[0].push_back(v++);
  for (int i = 0; i < p.small_clique(); ++i) out.blocks[1].push_back(v++);
  for (int i = 0; i < p.large_clique(); ++i) out.blocks[2].push_back(v++);
  return out;
}

namespace {

std::vector<std::uint64_t> block_masks(const Graph& g, const Partition& p) {
  const int words = g.words_per_row();
  std::vector<std::uint64_t> masks(p.blocks.size() * words, 0);
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    for (int v : p.blocks[b]) masks[b * words + v / 64] |= std::uint64_t{1} << (v % 64);
  return masks;
}

int neighbours_in(const Graph& g, int v, const std::vector<std::uint64_t>& masks, std::size_t block) {
  const int words = g.words_per_row();
  auto r = g.row(v);
  int c = 0;
  for (int w = 0; w < words; ++w) c += std::popcount(r[w] & masks[block * words + w]);
  return c;
}

}  // namespace

bool is_equitable(const Graph& g, const Partition& p) {
  p.validate(g.order());
  const auto masks = block_masks(g, p);
  for (const auto& block : p.blocks)
    for (std::size_t j = 0; j < p.blocks.size(); ++j) {
      const int first = neighbours_in(g, block.front(), masks, j);
      for (int v : block)
        if (neighbours_in(g, v, masks, j) != first) return false;
    }
  return true;
}

namespace {

QuotientMatrix from_counts(std::vector<long long> sizes, std::vector<std::vector<long long>> edges) {
  QuotientMatrix out;
  const int m = static_cast<int>(sizes.size());
  out.sizes = std::move(sizes);
  out.edge_counts = std::move(edges);
  out.q = DenseMatrix(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      out.q(i, j) = static_cast<double>(out.scaled_entry(i, j)) / static_cast<double>(out.sizes[i]);
  return out;
}

}  // namespace

QuotientMatrix quotient_matrix(const Graph& g, const Partition& p) {
  p.validate(g.order());
  const auto masks = block_masks(g, p);
  const std::size_t m = p.blocks.size();
  std::vector<std::vector<long long>> edges(m, std::vector<long long>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      long long total = 0;
      for (int v : p.blocks[i]) total += neighbours_in(g, v, masks, j);
      edges[i][j] = i == j ? total / 2 : total;
    }
  std::vector<long long> sizes;
  for (const auto& b : p.blocks) sizes.push_back(static_cast<long long>(b.size()));
  return from_counts(std::move(sizes), std::move(edges));
}

QuotientMatrix two_clique_quotient(int k, int n1, int n2) {
  if (k < 1 || n1 < 1 || n2 < 1) throw std::invalid_argument("two_clique_quotient needs k, n1, n2 >= 1");
  const long long s = k, a = n1, b = n2;
  return from_counts({s, a, b}, {{s * (s - 1) / 2, s * a, s * b}, {s * a, a * (a - 1) / 2, 0}, {s * b, 0, b * (b - 1) / 2}});
}

QuotientMatrix three_part_quotient(const ExtremalParams& p) {
  p.validate();
  return two_clique_quotient(p.join_size(), p.small_clique(), p.large_clique());
}

bool QuotientMatrix::is_integral() const {
  for (int i = 0; i < blocks(); ++i)
    for (int j = 0; j < blocks(); ++j)
      if (scaled_entry(i, j) % sizes[i] != 0) return false;
  return true;
}

std::vector<std::vector<long long>> QuotientMatrix::integer_entries() const {
  if (!is_integral()) throw std::domain_error("quotient matrix has non-integer entries");
  std::vector<std::vector<long long>> out(blocks(), std::vector<long long>(blocks()));
  for (int i = 0; i < blocks(); ++i)
    for (int j = 0; j < blocks(); ++j) out[i][j] = scaled_entry(i, j) / sizes[i];
  return out;
}

DenseMatrix QuotientMatrix::symmetrized() const {
  const int m = blocks();
  DenseMatrix s(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      // e_ij is symmetric in (i, j); scaling by 1/sqrt(n_i n_j) symmetrizes.
      const double e = static_cast<double>(scaled_entry(i, j));
      s(i, j) = e / std::sqrt(static_cast<double>(sizes[i]) * static_cast<double>(sizes[j]));
    }
  return s;
}

Spectrum quotient_spectrum(const QuotientMatrix& qm) { return full_spectrum(qm.symmetrized()); }

std::vector<double> lift(const Partition& p, std::span<const double> block_values, int n) {
  if (block_values.size() != p.blocks.size()) throw std::invalid_argument("lift: one value per block required");
  p.validate(n);
  std::vector<double> out(n);
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    for (int v : p.blocks[b]) out[v] = block_values[b];
  return out;
}

IntPoly CubicCoeffs::poly() const { return IntPoly({BigInt{c0}, BigInt{c1}, BigInt{c2}, BigInt{1}}); }

CubicCoeffs cubic_coefficients(const ExtremalParams& p) {
  p.validate();
  const long long n = p.n, k = p.k, d = p.delta;
  CubicCoeffs c;
  c.c2 = 3 - n;
  c.c1 = n * d - d * d - n - k * n + k + k * d + 2 - 2 * d;
  c.c0 = k * n * d + k * k + n * d + k * k * d - k * d - k * k * n - k * d * d - 2 * d - d * d;
  return c;
}

double largest_cubic_root(const CubicCoeffs& c) {
  const IntPoly p = c.poly();
  const SturmSequence sturm(p);
  RootInterval iv = isolate_largest_root(p);
  // Shrink until the double conversions of the ends are meaningful brackets.
  refine(sturm, iv, 8);

  const double lo0 = iv.lo.to_double();
  const double hi0 = iv.hi.to_double();
  auto f = [&](double x) { return ((x + c.c2) * x + c.c1) * x + c.c0; };
  auto df = [&](double x) { return (3.0 * x + 2.0 * c.c2) * x + c.c1; };
  const bool simple = p.sign_at(iv.lo) != p.sign_at(iv.hi);
  double x = 0.5 * (lo0 + hi0);
  if (simple) {
    // Safeguarded Newton: fall back to bisection when the step leaves the bracket.
    double lo = lo0, hi = hi0;
    const bool rising = p.sign_at(iv.lo) < 0;
    for (int it = 0; it < 200; ++it) {
      const double fx = f(x);
      if (fx == 0.0) break;
      if ((fx < 0) == rising) {
        lo = x;
      } else {
        hi = x;
      }
      const double d = df(x);
      double nx = d != 0.0 ? x - fx / d : 0.5 * (lo + hi);
      if (!(nx > lo && nx < hi)) nx = 0.5 * (lo + hi);
      if (std::abs(nx - x) <= 1e-15 * std::max(1.0, std::abs(x)) || hi - lo <= 1e-15 * std::max(1.0, std::abs(x))) {
        x = nx;
        break;
      }
      x = nx;
    }
    // Exact certificate: the root lies in (x - eps, x + eps).
    constexpr double eps = 5e-13;
    const Dyadic a = Dyadic::from_double(x - eps);
    const Dyadic b = Dyadic::from_double(x + eps);
    if (iv.lo <= a && b <= iv.hi && p.sign_at(a) != 0 && p.sign_at(b) != 0 && p.sign_at(a) != p.sign_at(b)) return x;
  }
  // Repeated largest root or a failed certificate: exact bisection to 2^-42.
  refine(sturm, iv, 42);
  return 0.5 * (iv.lo.to_double() + iv.hi.to_double());
}

bool check_interlacing(const Spectrum& sub, const Spectrum& full, double slack) {
  const std::size_t m = sub.eigs.size();
  const std::size_t n = full.eigs.size();
  if (m == 0 || m > n) throw std::invalid_argument("check_interlacing: need 1 <= m <= n");
  // Descending index i (1-based) maps to ascending position size - i.
  for (std::size_t i = 1; i <= m; ++i) {
    const double q = sub.eigs[m - i];
    const double upper = full.eigs[n - i];
    const double lower = full.eigs[n - (i + n - m)];
    if (q > upper + slack || q < lower - slack) return false;
  }
  return true;
}

}  // namespace specgraph

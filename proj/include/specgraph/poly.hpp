#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace specgraph {

using BigInt = boost::multiprecision::cpp_int;

/// Exact dyadic rational num / 2^shift.
struct Dyadic {
  BigInt num = 0;
  unsigned shift = 0;

  static Dyadic from_int(const BigInt& v) { return {v, 0}; }
  /// Exact conversion of a finite double.
  static Dyadic from_double(double x);
  double to_double() const;
  void normalize();

  friend int compare(const Dyadic& a, const Dyadic& b);
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return compare(a, b) <= 0; }
  friend bool operator==(const Dyadic& a, const Dyadic& b) { return compare(a, b) == 0; }
};

Dyadic midpoint(const Dyadic& a, const Dyadic& b);

/// Univariate polynomial with exact integer coefficients, lowest degree first.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  BigInt coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : BigInt{0}; }
  const BigInt& leading() const { return c_.back(); }

  IntPoly derivative() const;
  double eval(double x) const;
  /// Exact sign of p(x).
  int sign_at(const Dyadic& x) const;
  std::string to_string() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Divides out the content; the result has a positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);
/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
/// Primitive gcd with positive leading coefficient.
IntPoly gcd(IntPoly a, IntPoly b);

/// Sturm chain p, p', -rem(...), ... with each member scaled to its primitive
/// part by a positive factor. Counts distinct real roots.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& p);
  int variations(const Dyadic& x) const;
  /// Distinct roots in (a, b); a and b must not be roots.
  int count_roots(const Dyadic& a, const Dyadic& b) const { return variations(a) - variations(b); }
  const IntPoly& poly() const { return chain_.front(); }

 private:
  std::vector<IntPoly> chain_;
};

/// Open interval (lo, hi) holding exactly one distinct root; neither end is a root.
struct RootInterval {
  Dyadic lo;
  Dyadic hi;
};

/// Picks a point strictly inside (lo, hi), near the middle, that is not a root of p.
Dyadic split_point(const IntPoly& p, const Dyadic& lo, const Dyadic& hi);

/// Integer B with every real root of p in (-B, B) (Cauchy bound).
BigInt cauchy_bound(const IntPoly& p);

/// Isolates the largest real root of p. All real roots must lie in (lo, hi)
/// and lo, hi must not be roots. Throws std::domain_error if p has no real root.
RootInterval isolate_largest_root(const SturmSequence& s, Dyadic lo, Dyadic hi);
RootInterval isolate_largest_root(const IntPoly& p);

/// Halves an isolating interval, keeping the root inside.
void bisect_once(const SturmSequence& s, RootInterval& iv);
/// Refines until hi - lo <= 2^-bits.
void refine(const SturmSequence& s, RootInterval& iv, unsigned bits);

enum class RootOrder { less, equal, greater };

/// Exact comparison of the largest real roots of p and q. Both need a real root.
RootOrder compare_largest_roots(const IntPoly& p, const IntPoly& q);

}  // namespace specgraph

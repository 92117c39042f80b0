#include "specgraph/poly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace specgraph {

Dyadic Dyadic::from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("Dyadic::from_double: non-finite value");
  int exp = 0;
  const double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  Dyadic d;
  d.num = scaled;
  const int e = exp - 53;
  if (e >= 0) {
    d.num <<= e;
  } else {
    d.shift = static_cast<unsigned>(-e);
  }
  d.normalize();
  return d;
}

double Dyadic::to_double() const {
  // Keep ~64 significant bits before converting to avoid overflow on huge shifts.
  const unsigned bits = static_cast<unsigned>(msb(abs(num)) + 1);
  if (num == 0) return 0.0;
  if (bits <= 64) return std::ldexp(num.convert_to<double>(), -static_cast<int>(shift));
  const unsigned drop = bits - 64;
  const BigInt top = num >> drop;
  return std::ldexp(top.convert_to<double>(), static_cast<int>(drop) - static_cast<int>(shift));
}

void Dyadic::normalize() {
  if (num == 0) {
    shift = 0;
    return;
  }
  const unsigned tz = static_cast<unsigned>(lsb(abs(num)));
  const unsigned drop = std::min(tz, shift);
  num >>= drop;
  shift -= drop;
}

int compare(const Dyadic& a, const Dyadic& b) {
  const unsigned s = std::max(a.shift, b.shift);
  const BigInt lhs = a.num << (s - a.shift);
  const BigInt rhs = b.num << (s - b.shift);
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

Dyadic midpoint(const Dyadic& a, const Dyadic& b) {
  const unsigned s = std::max(a.shift, b.shift);
  Dyadic m{(a.num << (s - a.shift)) + (b.num << (s - b.shift)), s + 1};
  m.normalize();
  return m;
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return IntPoly(std::move(d));
}

double IntPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

int IntPoly::sign_at(const Dyadic& x) const {
  if (c_.empty()) return 0;
  // 2^(shift*deg) * p(num / 2^shift), evaluated by Horner.
  const int d = degree();
  BigInt acc = c_[d];
  for (int i = d - 1; i >= 0; --i) acc = acc * x.num + (c_[i] << (x.shift * static_cast<unsigned>(d - i)));
  return acc.sign();
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag;
    if (i >= 1) out << 'x';
    if (i >= 2) out << '^' << i;
    first = false;
  }
  return out.str();
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  BigInt content = 0;
  for (const auto& c : p.coeffs()) content = boost::multiprecision::gcd(content, c);
  if (p.leading() < 0) content = -content;
  std::vector<BigInt> out(p.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coeffs()[i] / content;
  return IntPoly(std::move(out));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder by zero polynomial");
  std::vector<BigInt> r = a.coeffs();
  const int db = b.degree();
  const BigInt& lb = b.leading();
  int dr = a.degree();
  int steps = std::max(a.degree() - db + 1, 0);
  while (dr >= db && dr >= 0) {
    const BigInt lr = r[dr];
    for (auto& c : r) c *= lb;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= lr * b.coeffs()[i];
    --steps;
    r.resize(dr);
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
  }
  // Pad the remaining powers of lc(b) so the result is exactly prem(a, b).
  for (; steps > 0; --steps)
    for (auto& c : r) c *= lb;
  return IntPoly(std::move(r));
}

IntPoly gcd(IntPoly a, IntPoly b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_part(r);
  }
  return a;
}

SturmSequence::SturmSequence(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
  chain_.push_back(primitive_part(p));
  if (p.degree() == 0) return;
  chain_.push_back(primitive_part(p.derivative()));
  while (true) {
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^e * rem with e = deg a - deg b + 1; the next member is -rem
    // up to a positive factor.
    const int e = a.degree() - b.degree() + 1;
    const bool flip = b.leading() < 0 && (e % 2 == 1);
    IntPoly next = primitive_part(r);
    // primitive_part forces a positive leading coefficient; restore the sign of -rem.
    const int rem_sign = r.leading().sign() * (flip ? -1 : 1);
    if (-rem_sign < 0) {
      std::vector<BigInt> neg = next.coeffs();
      for (auto& c : neg) c = -c;
      next = IntPoly(std::move(neg));
    }
    chain_.push_back(std::move(next));
  }
}

int SturmSequence::variations(const Dyadic& x) const {
  int count = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

Dyadic split_point(const IntPoly& p, const Dyadic& lo, const Dyadic& hi) {
  Dyadic mid = midpoint(lo, hi);
  if (p.sign_at(mid) != 0) return mid;
  // Walk toward hi through nested midpoints; p has finitely many roots.
  Dyadic probe = mid;
  for (int i = 0; i <= p.degree() + 1; ++i) {
    probe = midpoint(probe, hi);
    if (p.sign_at(probe) != 0) return probe;
  }
  throw std::logic_error("split_point: no non-root found");
}

BigInt cauchy_bound(const IntPoly& p) {
  if (p.degree() < 1) return 1;
  BigInt m = 0;
  const BigInt lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    const BigInt q = abs(p.coeffs()[i]) / lead + 1;  // ceil-ish upper estimate
    m = std::max(m, q);
  }
  return m + 1;
}

RootInterval isolate_largest_root(const SturmSequence& s, Dyadic lo, Dyadic hi) {
  const IntPoly& p = s.poly();
  int v_hi = s.variations(hi);
  if (s.variations(lo) - v_hi == 0) throw std::domain_error("polynomial has no real root in the search interval");
  while (s.variations(lo) - v_hi > 1) {
    Dyadic mid = split_point(p, lo, hi);
    const int v_mid = s.variations(mid);
    if (v_mid - v_hi >= 1) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
      v_hi = v_mid;
    }
  }
  return {std::move(lo), std::move(hi)};
}

RootInterval isolate_largest_root(const IntPoly& p) {
  const BigInt b = cauchy_bound(p);
  // Half-integers keep the initial ends off integer roots.
  Dyadic lo{-(2 * b + 1), 1};
  Dyadic hi{2 * b + 1, 1};
  return isolate_largest_root(SturmSequence(p), std::move(lo), std::move(hi));
}

void bisect_once(const SturmSequence& s, RootInterval& iv) {
  const IntPoly& p = s.poly();
  Dyadic mid = split_point(p, iv.lo, iv.hi);
  const int sl = p.sign_at(iv.lo);
  const int sh = p.sign_at(iv.hi);
  bool root_above;
  if (sl != sh) {
    root_above = p.sign_at(mid) == sl;
  } else {
    root_above = s.count_roots(mid, iv.hi) >= 1;
  }
  if (root_above) {
    iv.lo = std::move(mid);
  } else {
    iv.hi = std::move(mid);
  }
}

namespace {

bool narrower_than(const RootInterval& iv, unsigned bits) {
  Dyadic width{iv.hi.num << (std::max(iv.hi.shift, iv.lo.shift) - iv.hi.shift), std::max(iv.hi.shift, iv.lo.shift)};
  width.num -= iv.lo.num << (width.shift - iv.lo.shift);
  return compare(width, Dyadic{1, bits}) <= 0;
}

}  // namespace

void refine(const SturmSequence& s, RootInterval& iv, unsigned bits) {
  while (!narrower_than(iv, bits)) bisect_once(s, iv);
}

RootOrder compare_largest_roots(const IntPoly& p, const IntPoly& q) {
  if (primitive_part(p) == primitive_part(q)) return RootOrder::equal;
  const BigInt b = std::max(cauchy_bound(p), cauchy_bound(q));
  const Dyadic lo{-(2 * b + 1), 1};
  const Dyadic hi{2 * b + 1, 1};
  const SturmSequence sp(p);
  const SturmSequence sq(q);
  RootInterval ip = isolate_largest_root(sp, lo, hi);
  RootInterval iq = isolate_largest_root(sq, lo, hi);
  const IntPoly g = gcd(p, q);
  const bool share = g.degree() >= 1;
  const SturmSequence sg(share ? g : IntPoly({BigInt{1}}));
  while (true) {
    if (ip.hi <= iq.lo) return RootOrder::less;
    if (iq.hi <= ip.lo) return RootOrder::greater;
    if (share) {
      // Each interval holds exactly one root of its polynomial, so a root of
      // the common factor inside the overlap is the largest root of both.
      const Dyadic& a = ip.lo < iq.lo ? iq.lo : ip.lo;
      const Dyadic& z = ip.hi < iq.hi ? ip.hi : iq.hi;
      if (sg.count_roots(a, z) >= 1) return RootOrder::equal;
    }
    bisect_once(sp, ip);
    bisect_once(sq, iq);
  }
}

}  // namespace specgraph

#include "curvecert/ellq.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace curvecert::ellq {

using arith::den;
using arith::Fp;
using arith::FpField;
using arith::num;

EllQ::EllQ(WeierstrassModel m) : m_(std::move(m)) {}

bool EllQ::on_curve(const EPoint& p) const {
  if (p.inf) return true;
  return curves::is_on_curve(curves::CurveModel(m_), p.x, p.y);
}

EPoint EllQ::neg(const EPoint& p) const {
  if (p.inf) return p;
  return EPoint::affine(p.x, -p.y - m_.a1 * p.x - m_.a3);
}

EPoint EllQ::add(const EPoint& p, const EPoint& q) const {
  if (p.inf) return q;
  if (q.inf) return p;
  if (p.x == q.x && p.y != q.y) return EPoint::infinity();
  Rat lam;
  if (p.x == q.x) {
    Rat denom = 2 * p.y + m_.a1 * p.x + m_.a3;
    if (denom == 0) return EPoint::infinity();
    lam = (3 * p.x * p.x + 2 * m_.a2 * p.x + m_.a4 - m_.a1 * p.y) / denom;
  } else {
    lam = (q.y - p.y) / (q.x - p.x);
  }
  Rat nu = p.y - lam * p.x;
  Rat x3 = lam * lam + m_.a1 * lam - m_.a2 - p.x - q.x;
  Rat y3 = -(lam + m_.a1) * x3 - nu - m_.a3;
  return EPoint::affine(x3, y3);
}

EPoint EllQ::mul(long n, const EPoint& p) const {
  EPoint base = n < 0 ? neg(p) : p;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  EPoint acc = EPoint::infinity();
  while (k) {
    if (k & 1) acc = add(acc, base);
    base = add(base, base);
    k >>= 1;
  }
  return acc;
}

int EllQ::order_of(const EPoint& p, int cap) const {
  EPoint acc = p;
  for (int n = 1; n <= cap; ++n) {
    if (acc.inf) return n;
    acc = add(acc, p);
  }
  return 0;
}

namespace {

// Integer roots of X^3 + a X + b, by bisection over the monotone integer
// ranges cut at the critical points.
std::vector<Int> monic_cubic_integer_roots(const Int& a, const Int& b) {
  auto g = [&](const Int& x) { return x * x * x + a * x + b; };
  Int M = 1 + std::max(abs(a), abs(b));
  std::vector<Int> roots;
  auto search = [&](Int lo, Int hi, int sgn) {
    // sgn * g is nondecreasing on the integers of [lo, hi]
    if (lo > hi) return;
    if (sgn * g(lo) > 0 || sgn * g(hi) < 0) return;
    while (lo < hi) {
      Int mid = lo + (hi - lo) / 2;
      if (sgn * g(mid) < 0) lo = mid + 1;
      else hi = mid;
    }
    if (g(lo) == 0) roots.push_back(lo);
  };
  if (a >= 0) {
    search(-M, M, 1);
  } else {
    Int t = arith::isqrt((-a) / 3);
    search(-M, -t - 1, 1);
    search(-t, t, -1);
    search(t + 1, M, 1);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// Square divisors d^2 | n, returned as the list of d >= 1.
std::vector<Int> square_divisor_roots(const Int& n) {
  std::vector<Int> primes = poly::factor_integer(abs(n));
  // collapse to (prime, exponent/2)
  std::vector<std::pair<Int, int>> pe;
  for (const Int& p : primes) {
    if (!pe.empty() && pe.back().first == p) ++pe.back().second;
    else pe.push_back({p, 1});
  }
  std::vector<Int> ds{Int(1)};
  for (auto& [p, e] : pe) {
    int half = e / 2;
    size_t base = ds.size();
    Int pk = 1;
    for (int i = 1; i <= half; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

Int lcm_int(const Int& a, const Int& b) { return a / arith::gcd_int(a, b) * b; }

}  // namespace

TorsionGroup torsion_subgroup(const WeierstrassModel& m) {
  EllQ E(m);
  // short model Y^2 = X^3 + A X + B with X = 36 x + 3 b2,
  // Y = 108 (2 y + a1 x + a3); scale by u to make A, B integral.
  Rat A = -27 * m.c4(), B = -54 * m.c6();
  Int u = lcm_int(den(A), den(B));
  Int Ai = num(A * u * u * u * u);
  Int Bi = num(B * u * u * u * u * u * u);
  Int disc16 = -16 * (4 * Ai * Ai * Ai + 27 * Bi * Bi);

  std::vector<Int> ys{Int(0)};
  for (const Int& d : square_divisor_roots(disc16)) ys.push_back(d);

  std::set<EPoint> pts;
  pts.insert(EPoint::infinity());
  for (const Int& Y : ys) {
    for (const Int& X : monic_cubic_integer_roots(Ai, Bi - Y * Y)) {
      for (int sign : {1, -1}) {
        if (Y == 0 && sign < 0) continue;
        Rat Xs = Rat(X) / (u * u), Ys = Rat(sign * Y) / (u * u * u);
        Rat x = (Xs - 3 * m.b2()) / 36;
        Rat y = (Ys / 108 - m.a1 * x - m.a3) / 2;
        EPoint p = EPoint::affine(x, y);
        if (!E.on_curve(p)) continue;
        if (E.order_of(p) > 0) pts.insert(p);
      }
    }
  }

  TorsionGroup g;
  g.points.assign(pts.begin(), pts.end());
  g.order = static_cast<int>(g.points.size());
  int two_torsion = 0;
  for (const EPoint& p : g.points)
    if (!p.inf && E.add(p, p).inf) ++two_torsion;
  if (g.order == 1) g.structure = "trivial";
  else if (two_torsion <= 1) g.structure = "Z/" + std::to_string(g.order);
  else g.structure = "Z/2 x Z/" + std::to_string(g.order / 2);
  return g;
}

namespace {

Fp reduce_rat(const FpField& F, const Rat& q) {
  Int d = den(q);
  if (d % F.p() == 0) throw std::domain_error("reduction: denominator divisible by p");
  return F.make(num(q)) / F.make(d);
}

}  // namespace

bool good_reduction(const WeierstrassModel& m, std::uint64_t p) {
  Rat d = m.disc();
  if (den(d) % p == 0) return false;
  return num(d) % p != 0;
}

Int reduction_count(const WeierstrassModel& m, std::uint64_t p) {
  if (p == 2) throw std::invalid_argument("reduction_count: p must be odd");
  if (!good_reduction(m, p)) throw std::invalid_argument("reduction_count: bad reduction");
  FpField F(p);
  // complete the square: (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
  Fp b2 = reduce_rat(F, m.b2()), b4 = reduce_rat(F, m.b4()), b6 = reduce_rat(F, m.b6());
  Fp four = F.make(4), two = F.make(2);
  Int count = 1;  // infinity
  std::uint64_t e = (p - 1) / 2;
  for (std::uint64_t xv = 0; xv < p; ++xv) {
    Fp x = F.make(xv);
    Fp rhs = ((four * x + b2) * x + two * b4) * x + b6;
    if (rhs.is_zero()) count += 1;
    else if (rhs.pow(e) == F.one()) count += 2;
  }
  return count;
}

Int torsion_multiple_via_reduction(const WeierstrassModel& m, const std::vector<std::uint64_t>& primes) {
  Int g = 0;
  for (std::uint64_t p : primes) {
    if (p == 2 || !good_reduction(m, p)) continue;
    g = arith::gcd_int(g, reduction_count(m, p));
    if (g == 1) break;
  }
  if (g == 0) throw std::invalid_argument("torsion_multiple_via_reduction: no usable primes");
  return g;
}

TorsionGroup mordell_weil_with_rank(const WeierstrassModel& m, int rank) {
  if (rank != 0)
    throw std::invalid_argument("mordell_weil_with_rank: only rank zero can be consumed here");
  return torsion_subgroup(m);
}

}  // namespace curvecert::ellq

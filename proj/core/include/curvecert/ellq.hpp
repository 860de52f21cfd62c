#pragma once

// Elliptic curves over Q: chord-and-tangent group law, the integral-model
// torsion search, torsion bounds from good reduction, and assembly of the
// full Mordell-Weil group from a rank fact.

#include "curvecert/curves.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace curvecert::ellq {

using curves::WeierstrassModel;
using poly::Int;
using poly::Rat;

struct EPoint {
  bool inf = true;
  Rat x, y;

  static EPoint infinity() { return EPoint{}; }
  static EPoint affine(Rat x, Rat y) { return EPoint{false, std::move(x), std::move(y)}; }

  bool operator==(const EPoint& o) const {
    if (inf || o.inf) return inf == o.inf;
    return x == o.x && y == o.y;
  }
  bool operator<(const EPoint& o) const {
    if (inf != o.inf) return inf;  // infinity sorts first
    if (x != o.x) return x < o.x;
    return y < o.y;
  }
};

class EllQ {
 public:
  explicit EllQ(WeierstrassModel m);

  const WeierstrassModel& model() const { return m_; }
  bool on_curve(const EPoint& p) const;

  EPoint neg(const EPoint& p) const;
  EPoint add(const EPoint& p, const EPoint& q) const;
  EPoint mul(long n, const EPoint& p) const;

  // Least n >= 1 with n p = 0, or 0 if the order exceeds the cap.
  int order_of(const EPoint& p, int cap = 16) const;

 private:
  WeierstrassModel m_;
};

struct TorsionGroup {
  std::vector<EPoint> points;  // all torsion points, infinity first
  int order;                   // = points.size()
  std::string structure;       // "trivial", "Z/n" or "Z/2 x Z/2m"
};

// Full torsion subgroup by the integral-model divisibility criterion:
// candidates on Y^2 = X^3 - 27 c4 X - 54 c6 have Y = 0 or Y^2 | disc,
// and each candidate is certified torsion by a small multiple reaching 0.
TorsionGroup torsion_subgroup(const WeierstrassModel& m);

// Number of points of the reduction mod p, including infinity; p must be
// an odd prime of good reduction.
Int reduction_count(const WeierstrassModel& m, std::uint64_t p);

bool good_reduction(const WeierstrassModel& m, std::uint64_t p);

// gcd of #E(F_p) over the given odd primes of good reduction; the torsion
// order divides it.  Primes of bad reduction are skipped.
Int torsion_multiple_via_reduction(const WeierstrassModel& m, const std::vector<std::uint64_t>& primes);

// E(Q) = torsion when the rank is zero; any other rank input is refused
// because this library cannot certify positive rank.
TorsionGroup mordell_weil_with_rank(const WeierstrassModel& m, int rank);

}  // namespace curvecert::ellq

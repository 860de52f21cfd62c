#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvecert/ellq.hpp"

#include <algorithm>

using namespace curvecert::ellq;

namespace {

WeierstrassModel e27() { return WeierstrassModel(0, 0, 1, 0, 0, "E27"); }
WeierstrassModel e64a4() { return WeierstrassModel(0, 0, 0, 1, 0, "E64a4"); }
WeierstrassModel e432() { return WeierstrassModel(0, 0, 0, 0, -432, "E432"); }

}  // namespace

TEST_CASE("group law") {
  EllQ E(e27());
  EPoint p = EPoint::affine(0, 0);
  CHECK(E.on_curve(p));
  EPoint p2 = E.add(p, p);
  CHECK(p2 == EPoint::affine(0, -1));
  CHECK(E.add(p2, p).inf);
  CHECK(E.mul(3, p).inf);
  CHECK(E.mul(-1, p) == p2);
  CHECK(E.order_of(p) == 3);
  CHECK(E.order_of(EPoint::infinity()) == 1);

  // a non-torsion point: (2,3) on y^2 = x^3 + 1... use rank-1 curve y^2 = x^3 - 2
  EllQ F(WeierstrassModel(0, 0, 0, 0, -2));
  EPoint q = EPoint::affine(3, 5);
  CHECK(F.on_curve(q));
  CHECK(F.order_of(q) == 0);
  EPoint q2 = F.add(q, q);
  CHECK(F.on_curve(q2));
  CHECK(q2 == EPoint::affine(Rat(129, 100), Rat(-383, 1000)));
}

TEST_CASE("torsion of the three auxiliary cubics") {
  TorsionGroup t27 = torsion_subgroup(e27());
  CHECK(t27.order == 3);
  CHECK(t27.structure == "Z/3");
  CHECK(std::count(t27.points.begin(), t27.points.end(), EPoint::affine(0, 0)) == 1);
  CHECK(std::count(t27.points.begin(), t27.points.end(), EPoint::affine(0, -1)) == 1);

  TorsionGroup t64 = torsion_subgroup(e64a4());
  CHECK(t64.order == 2);
  CHECK(t64.structure == "Z/2");
  CHECK(std::count(t64.points.begin(), t64.points.end(), EPoint::affine(0, 0)) == 1);

  TorsionGroup t432 = torsion_subgroup(e432());
  CHECK(t432.order == 3);
  CHECK(t432.structure == "Z/3");
  CHECK(std::count(t432.points.begin(), t432.points.end(), EPoint::affine(12, 36)) == 1);
}

TEST_CASE("torsion on reference curves") {
  // y^2 = x^3 - x : full two-torsion
  TorsionGroup t = torsion_subgroup(WeierstrassModel(0, 0, 0, -1, 0));
  CHECK(t.order == 4);
  CHECK(t.structure == "Z/2 x Z/2");

  // y^2 = x^3 + 4x : cyclic of order 4
  TorsionGroup t4 = torsion_subgroup(WeierstrassModel(0, 0, 0, 4, 0));
  CHECK(t4.order == 4);
  CHECK(t4.structure == "Z/4");
  CHECK(std::count(t4.points.begin(), t4.points.end(), EPoint::affine(2, 4)) == 1);

  // y^2 + y = x^3 - x^2 - 10x - 20 : cyclic of order 5
  TorsionGroup t5 = torsion_subgroup(WeierstrassModel(0, -1, 1, -10, -20));
  CHECK(t5.order == 5);
  CHECK(t5.structure == "Z/5");
  CHECK(std::count(t5.points.begin(), t5.points.end(), EPoint::affine(5, 5)) == 1);

  // y^2 = x^3 - 2 : trivial torsion
  TorsionGroup t0 = torsion_subgroup(WeierstrassModel(0, 0, 0, 0, -2));
  CHECK(t0.order == 1);
  CHECK(t0.structure == "trivial");
}

TEST_CASE("reduction counts") {
  CHECK(good_reduction(e27(), 5));
  CHECK(!good_reduction(e27(), 3));
  CHECK(!good_reduction(e64a4(), 2));

  CHECK(reduction_count(e27(), 5) == 6);
  CHECK(reduction_count(e27(), 7) == 9);
  CHECK(reduction_count(e64a4(), 3) == 4);
  CHECK(reduction_count(e64a4(), 5) == 4);
  CHECK(reduction_count(e64a4(), 7) == 8);
  CHECK(reduction_count(e64a4(), 13) == 20);

  // Hasse bound spot check
  for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL, 101ULL}) {
    if (!good_reduction(e432(), p)) continue;
    Int n = reduction_count(e432(), p);
    Int diff = n - Int(p) - 1;
    CHECK(diff * diff <= 4 * Int(p));
  }
}

TEST_CASE("torsion bound via good reduction") {
  CHECK(torsion_multiple_via_reduction(e27(), {5, 7, 11, 13, 17, 19}) == 3);
  // supersingular primes p = 3 mod 4 force an extra factor of 2 here
  Int b = torsion_multiple_via_reduction(e64a4(), {3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(b % 2 == 0);
  CHECK(torsion_subgroup(e64a4()).order % 2 == 0);
  Int b432 = torsion_multiple_via_reduction(e432(), {5, 7, 11, 13, 17, 19, 23});
  CHECK(b432 % 3 == 0);
}

TEST_CASE("rank fact consumption") {
  TorsionGroup g = mordell_weil_with_rank(e27(), 0);
  CHECK(g.order == 3);
  CHECK_THROWS(mordell_weil_with_rank(e27(), 1));
  CHECK_THROWS(mordell_weil_with_rank(e27(), -1));
}

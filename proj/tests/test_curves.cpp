#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvecert/curves.hpp"

using namespace curvecert::curves;
using curvecert::parse::parse_bipoly;
using curvecert::parse::parse_qpoly;
using curvecert::parse::parse_ratfunc;
using curvecert::poly::qpoly;
using curvecert::poly::QPoly;

namespace {

HyperellipticModel cn_model(int n) {
  return HyperellipticModel(parse_qpoly("-4*x^" + std::to_string(n) + " + 1", "x"), "C" + std::to_string(n));
}

}  // namespace

TEST_CASE("curve model construction") {
  CHECK_THROWS(FermatCurve(2));
  CHECK_THROWS(HyperellipticModel(parse_qpoly("x^2 + 1", "x")));
  CHECK_THROWS(HyperellipticModel(parse_qpoly("x^4 + 2*x^3 + x^2", "x")));  // not squarefree
  CHECK(cn_model(7).genus == 3);
  CHECK(cn_model(8).genus == 3);
  CHECK(cn_model(6).genus == 2);
  CHECK(cn_model(7).odd_degree());
  CHECK(!cn_model(8).odd_degree());

  WeierstrassModel e27(0, 0, 1, 0, 0, "E27");
  CHECK(e27.disc() == Rat(-27));
  CHECK(e27.c4() == 0);
  WeierstrassModel e64(0, 0, 0, 1, 0, "E64a4");
  CHECK(e64.disc() == Rat(-64));
  CHECK_THROWS(WeierstrassModel(0, 0, 0, 0, 0));
}

TEST_CASE("point membership") {
  auto c7 = cn_model(7);
  CHECK(is_on_curve(c7, Rat(0), Rat(1)));
  CHECK(is_on_curve(c7, Rat(0), Rat(-1)));
  CHECK(!is_on_curve(c7, Rat(1), Rat(1)));
  CHECK_THROWS(AffinePoint(CurveModel(c7), Rat(1), Rat(1)));

  FermatCurve f7(7);
  CHECK(is_on_curve(CurveModel(f7), Rat(0), Rat(1)));
  CHECK(is_on_curve(CurveModel(f7), Rat(1), Rat(0)));
  CHECK(!is_on_curve(CurveModel(f7), Rat(1), Rat(1)));

  WeierstrassModel e27(0, 0, 1, 0, 0);
  CHECK(is_on_curve(CurveModel(e27), Rat(0), Rat(0)));
  CHECK(is_on_curve(CurveModel(e27), Rat(0), Rat(-1)));
}

TEST_CASE("degree-n covering of the hyperelliptic quotient") {
  for (int n = 3; n <= 10; ++n) {
    RationalMap m = fermat_hyperelliptic_map(n);
    MapCheck chk = verify_map(m);
    CHECK(chk.ok);
  }
  // images of the trivial solutions
  RationalMap m7 = fermat_hyperelliptic_map(7);
  MapImage im = apply_map(m7, Rat(0), Rat(1));
  CHECK(!im.indeterminate);
  CHECK(im.x == 0);
  CHECK(im.y == -1);
  MapImage im2 = apply_map(m7, Rat(1), Rat(0));
  CHECK(im2.x == 0);
  CHECK(im2.y == 1);
}

TEST_CASE("genus-2 quotient to the j=0 cubic") {
  RationalMap m{cn_model(6), WeierstrassModel(0, 0, 1, 0, 0, "E27"),
                parse_ratfunc("-x^2", "x", "y"), parse_ratfunc("(y - 1)/2", "x", "y"), "C6-to-E27"};
  CHECK(verify_map(m).ok);

  MapImage im = apply_map(m, Rat(0), Rat(1));
  CHECK(im.x == 0);
  CHECK(im.y == 0);
  MapImage im2 = apply_map(m, Rat(0), Rat(-1));
  CHECK(im2.x == 0);
  CHECK(im2.y == -1);

  // sign mistake must be caught
  RationalMap bad = m;
  bad.cx = parse_ratfunc("x^2", "x", "y");
  CHECK(!verify_map(bad).ok);

  auto pre = preimages(m, Rat(0), Rat(0));
  REQUIRE(pre.points.size() == 1);
  CHECK(pre.points[0] == std::make_pair(Rat(0), Rat(1)));
  CHECK(pre.base_locus.empty());

  auto pre2 = preimages(m, Rat(0), Rat(-1));
  REQUIRE(pre2.points.size() == 1);
  CHECK(pre2.points[0] == std::make_pair(Rat(0), Rat(-1)));
}

TEST_CASE("degree-2 map from the octic curve to y^2 = x^3 + x") {
  RationalMap m{cn_model(8), WeierstrassModel(0, 0, 0, 1, 0, "E64a4"),
                parse_ratfunc("(1 - y)/(2*x^4)", "x", "y"),
                parse_ratfunc("(y - 1)/(2*x^6)", "x", "y"), "C8-to-E64a4"};
  CHECK(verify_map(m).ok);

  auto bl = base_locus(m);
  REQUIRE(bl.size() == 2);
  CHECK(bl[0] == std::make_pair(Rat(0), Rat(-1)));
  CHECK(bl[1] == std::make_pair(Rat(0), Rat(1)));

  // the affine formulas degenerate at both points above x = 0
  CHECK(apply_map(m, Rat(0), Rat(1)).indeterminate);
  CHECK(apply_map(m, Rat(0), Rat(-1)).indeterminate);

  // neither affine rational point of the target pulls back to an affine
  // rational point away from the base locus
  auto pre = preimages(m, Rat(0), Rat(0));
  CHECK(pre.points.empty());
  REQUIRE(pre.base_locus.size() == 2);
}

TEST_CASE("plane models from degree-4 functions") {
  // s = (y - 1)/x^3 on y^2 = -4x^7 + 1
  BiPoly m1 = plane_model_from_function(cn_model(7), Rat(-1), 3);
  CHECK(m1 == parse_bipoly("4*x^4 + 2*s + s^2*x^3", "x", "s"));

  // w = (y + 1)/x^4 on y^2 = -4x^7 + 1
  BiPoly m2 = plane_model_from_function(cn_model(7), Rat(1), 4);
  CHECK(m2 == parse_bipoly("4*x^3 + w^2*x^4 - 2*w", "x", "w"));

  // s = (y + 1)/x^4 on y^2 = -4x^8 + 1
  BiPoly m3 = plane_model_from_function(cn_model(8), Rat(1), 4);
  CHECK(m3 == parse_bipoly("4*x^4 + s^2*x^4 - 2*s", "x", "s"));
}

TEST_CASE("plane model discriminants match the descent formulas") {
  using curvecert::poly::bi_transpose;
  using curvecert::poly::discriminant;
  // discriminant taken in the plane-model variable r = x, so transpose first
  QPoly d1 = discriminant(bi_transpose(plane_model_from_function(cn_model(7), Rat(-1), 3)));
  CHECK(d1 == parse_qpoly("(2*s)^2*(2^15*s - 27*s^8)", "s"));

  QPoly d2 = discriminant(bi_transpose(plane_model_from_function(cn_model(7), Rat(1), 4)));
  CHECK(d2 == parse_qpoly("2^10*w^2*(-2*w^7 - 27)", "w"));

  QPoly d3 = discriminant(bi_transpose(plane_model_from_function(cn_model(8), Rat(1), 4)));
  CHECK(d3 == parse_qpoly("-2^11*s^3*(s^2 + 4)^3", "s"));
}

TEST_CASE("points at infinity") {
  CHECK(rational_points_at_infinity(cn_model(7)) == 1);
  CHECK(rational_points_at_infinity(cn_model(6)) == 0);
  CHECK(rational_points_at_infinity(cn_model(8)) == 0);
  CHECK(rational_points_at_infinity(HyperellipticModel(parse_qpoly("4*x^6 + x + 1", "x"))) == 2);
  CHECK(rational_points_at_infinity(HyperellipticModel(parse_qpoly("2*x^7 - 27", "x"))) == 1);
}

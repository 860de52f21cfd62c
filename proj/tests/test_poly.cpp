#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvecert/parse.hpp"
#include "curvecert/poly.hpp"
#include "curvecert/series.hpp"

using namespace curvecert::poly;
using curvecert::parse::parse_bipoly;
using curvecert::parse::parse_qpoly;

TEST_CASE("polynomial basics") {
  QPoly f = qpoly({Rat(-1), Rat(0), Rat(1)});  // x^2 - 1
  QPoly g = qpoly({Rat(1), Rat(1)});           // x + 1
  CHECK(f.degree() == 2);
  CHECK((f + g).coeff(0) == 0);
  CHECK(exact_div(f, g) == qpoly({Rat(-1), Rat(1)}));
  CHECK(f.derivative() == qpoly({Rat(0), Rat(2)}));
  CHECK(f.eval_same(Rat(3)) == 8);

  auto [q, r] = f.divmod(qpoly({Rat(0), Rat(2)}));
  CHECK(q == qpoly({Rat(0), Rat(1, 2)}));
  CHECK(r == qpoly({Rat(-1)}));
}

TEST_CASE("gcd and squarefree structure") {
  QPoly x = qpoly({Rat(0), Rat(1)});
  QPoly f = (x - qpoly({Rat(1)})) * (x - qpoly({Rat(1)})) * (x + qpoly({Rat(2)}));
  CHECK(qgcd(f, f.derivative()) == x - qpoly({Rat(1)}));
  CHECK(!is_squarefree(f));
  CHECK(is_squarefree(x * x - qpoly({Rat(2)})));

  auto yun = yun_factorisation(f * Rat(6));
  REQUIRE(yun.size() == 2);
  CHECK(yun[0] == x + qpoly({Rat(2)}));
  CHECK(yun[1] == x - qpoly({Rat(1)}));
}

TEST_CASE("squarefree split f = unit * A^2 * B") {
  // 4 s^2 (-27 s^8 + 2^15 s) as it appears in the first quartic descent
  QPoly f = parse_qpoly("4*s^2*(2^15*s - 27*s^8)", "s");
  auto sp = squarefree_decomposition(f);
  CHECK(sp.unit == Rat(-108));
  CHECK(sp.square_part == parse_qpoly("s", "s"));
  CHECK(sp.reduced_part == parse_qpoly("s^8 - (2^15/27)*s", "s"));
  QPoly back = sp.square_part * sp.square_part * sp.reduced_part * sp.unit;
  CHECK(back == f);
}

TEST_CASE("rational roots") {
  QPoly f = parse_qpoly("6*x^3 - 11*x^2 + 6*x - 1", "x");
  auto roots = rational_roots(f);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == Rat(1, 3));
  CHECK(roots[1] == Rat(1, 2));
  CHECK(roots[2] == Rat(1));

  CHECK(rational_roots(parse_qpoly("x^2 - 2", "x")).empty());
  auto with_zero = rational_roots(parse_qpoly("x^3 + x^2", "x"));
  REQUIRE(with_zero.size() == 2);
  CHECK(with_zero[0] == Rat(-1));
  CHECK(with_zero[1] == Rat(0));
}

TEST_CASE("resultant and discriminant over Q") {
  QPoly f = parse_qpoly("x^2 - 1", "x");
  QPoly g = parse_qpoly("x^2 - 4", "x");
  CHECK(resultant(f, g) == Rat(9));
  CHECK(resultant(f, f) == Rat(0));

  CHECK(discriminant(parse_qpoly("x^2 + 3*x + 1", "x")) == Rat(5));
  CHECK(discriminant(parse_qpoly("x^3 - x", "x")) == Rat(4));        // -4p^3 - 27q^2, p=-1
  CHECK(discriminant(parse_qpoly("x^3 - 2", "x")) == Rat(-108));
  CHECK(discriminant(parse_qpoly("x^4 - 2", "x")) == Rat(-2048));
  CHECK(discriminant(parse_qpoly("2*x^2 + 2*x + 2", "x")) == Rat(-12));  // b^2 - 4ac
}

TEST_CASE("quartic descent discriminants") {
  // The three plane-model discriminants used in the descents; the factored
  // right-hand sides are the published closed forms.
  BiPoly m1 = parse_bipoly("4*r^4 + s^2*r^3 + 2*s", "s", "r");  // outer r, inner s
  QPoly d1 = discriminant(m1);
  CHECK(d1 == parse_qpoly("(2*s)^2 * (2^15*s - 3^3*s^8)", "s"));

  BiPoly m2 = parse_bipoly("w^2*v^4 + 4*v^3 - 2*w", "w", "v");
  QPoly d2 = discriminant(m2);
  CHECK(d2 == parse_qpoly("2^10*w^2*(-2*w^7 - 27)", "w"));

  BiPoly m3 = parse_bipoly("4*r^4 + r^4*s^2 - 2*s", "s", "r");
  QPoly d3 = discriminant(m3);
  CHECK(d3 == parse_qpoly("-2^11*s^3*(s^2 + 4)^3", "s"));
}

TEST_CASE("taylor shift") {
  QPoly f = parse_qpoly("x^2", "x");
  CHECK(taylor_shift(f, Rat(1)) == parse_qpoly("x^2 + 2*x + 1", "x"));
  QPoly g = parse_qpoly("x^3 - 2*x + 5", "x");
  CHECK(taylor_shift(g, Rat(-3, 2)).eval_same(Rat(7, 2)) == g.eval_same(Rat(2)));
}

TEST_CASE("integer factorisation") {
  auto f = factor_integer(Int(2) * 2 * 2 * 3 * 7 * 7 * 1009);
  REQUIRE(f.size() == 7);
  CHECK(f[0] == 2);
  CHECK(f[3] == 3);
  CHECK(f[5] == 7);
  CHECK(f[6] == 1009);

  auto d = divisors_of(Int(12));
  REQUIRE(d.size() == 6);
  CHECK(d.front() == 1);
  CHECK(d.back() == 12);

  // product of two 10-digit primes
  Int n = Int("2147483659") * Int("2147483693");
  auto g = factor_integer(n);
  REQUIRE(g.size() == 2);
  CHECK(g[0] * g[1] == n);
}

TEST_CASE("bivariate plumbing") {
  BiPoly f = parse_bipoly("y^2 - x^3 + x*y", "x", "y");
  CHECK(bi_eval(f, Rat(2), Rat(1)) == Rat(1 - 8 + 2));
  BiPoly t = bi_transpose(f);
  CHECK(bi_eval(t, Rat(1), Rat(2)) == Rat(1 - 8 + 2));
  QPoly sub = bi_eval_y(f, qpoly({Rat(0), Rat(1)}));  // y := x
  CHECK(sub == parse_qpoly("x^2 - x^3 + x^2", "x"));
}

TEST_CASE("power series") {
  using curvecert::poly::PowerSeries;
  PowerSeries one(Rat(1), 10);
  PowerSeries t = PowerSeries::t(10);
  PowerSeries geom = (one - t).inverse();
  CHECK(geom.coeff(0) == 1);
  CHECK(geom.coeff(7) == 1);

  // sqrt(1 - 4 t^7) = 1 - 2 t^7 - 2 t^14 - ...
  QPoly c = parse_qpoly("1 - 4*x^7", "x");
  PowerSeries s = series_sqrt(PowerSeries::from_poly(c, 20), Rat(1));
  CHECK(s.coeff(0) == 1);
  CHECK(s.coeff(7) == Rat(-2));
  CHECK(s.coeff(14) == Rat(-2));
  CHECK((s * s - PowerSeries::from_poly(c, 20)).visibly_zero());

  PowerSeries sneg = series_sqrt(PowerSeries::from_poly(c, 20), Rat(-1));
  CHECK(sneg.coeff(0) == -1);
  CHECK(sneg.coeff(7) == Rat(2));

  // composition: (1+u)^2 with u = t + t^2
  QPoly sq = parse_qpoly("1 + 2*x + x^2", "x");
  PowerSeries u = PowerSeries(std::vector<Rat>{Rat(0), Rat(1), Rat(1)}, 10);
  PowerSeries comp = compose_poly(sq, u);
  CHECK(comp.coeff(0) == 1);
  CHECK(comp.coeff(1) == 2);
  CHECK(comp.coeff(2) == 3);

  // reversion: t^2 = u + u^2 gives u = t^2 - t^4 + 2 t^6 - ...
  QPoly rel = parse_qpoly("1 + x", "x");
  PowerSeries rev = revert_even(rel, 10);
  CHECK(rev.coeff(2) == 1);
  CHECK(rev.coeff(4) == -1);
  CHECK(rev.coeff(6) == 2);
  PowerSeries lhs = compose_poly(parse_qpoly("x + x^2", "x"), rev);
  CHECK(lhs.coeff(2) == 1);
  CHECK(lhs.coeff(4) == 0);
  CHECK(lhs.coeff(6) == 0);
}

TEST_CASE("divisor expression parsing") {
  auto d = curvecert::parse::parse_divisor_expr("4*P0 + 3*(P1 - P0)");
  CHECK(d.at("P0") == 1);
  CHECK(d.at("P1") == 3);
  auto e = curvecert::parse::parse_divisor_expr("2*P0 + 2*P1 + 2*(P1 - P0)");
  CHECK(e.count("P0") == 0);  // coefficient cancelled to zero
  CHECK(e.at("P1") == 4);
  auto f = curvecert::parse::parse_divisor_expr("P0 - P0");
  CHECK(f.empty());
}

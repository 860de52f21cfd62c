#include "curvecert/curves.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace curvecert::curves {

using poly::bi_x;
using poly::bi_y;
using poly::is_zero;
using poly::qpoly;

FermatCurve::FermatCurve(int n_) : n(n_) {
  if (n < 3) throw std::invalid_argument("FermatCurve: n must be >= 3");
}

HyperellipticModel::HyperellipticModel(QPoly f_, std::string name_) : f(std::move(f_)), name(std::move(name_)) {
  if (f.degree() < 3) throw std::invalid_argument("HyperellipticModel: deg f must be >= 3");
  if (!poly::is_squarefree(f)) throw std::invalid_argument("HyperellipticModel: f must be squarefree");
  genus = (f.degree() - 1) / 2;
}

WeierstrassModel::WeierstrassModel(Rat a1_, Rat a2_, Rat a3_, Rat a4_, Rat a6_, std::string name_)
    : a1(std::move(a1_)), a2(std::move(a2_)), a3(std::move(a3_)), a4(std::move(a4_)), a6(std::move(a6_)), name(std::move(name_)) {
  if (disc() == 0) throw std::invalid_argument("WeierstrassModel: singular model (discriminant zero)");
}

Rat WeierstrassModel::b8() const {
  return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
}

Rat WeierstrassModel::disc() const {
  Rat B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
  return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
}

BiPoly WeierstrassModel::defining_poly() const {
  QPoly rhs = qpoly({a6, a4, a2, Rat(1)});             // x^3 + a2 x^2 + a4 x + a6
  QPoly ylin = qpoly({a3, a1});                        // a1 x + a3
  return BiPoly(std::vector<QPoly>{-rhs, ylin, qpoly({Rat(1)})});  // y^2 + (a1 x + a3) y - rhs
}

BiPoly curve_relation(const CurveModel& c) {
  if (auto* fc = std::get_if<FermatCurve>(&c)) {
    // alpha^n + beta^n - 1 in the chart z = 1; alpha is the inner
    // variable, beta the outer (the relation is monic in beta).
    QPoly alphan = QPoly::monomial(Rat(1), fc->n) - qpoly({Rat(1)});
    std::vector<QPoly> co(static_cast<size_t>(fc->n) + 1);
    co[0] = alphan;
    co[fc->n] = qpoly({Rat(1)});
    return BiPoly(std::move(co));
  }
  if (auto* h = std::get_if<HyperellipticModel>(&c)) {
    return BiPoly(std::vector<QPoly>{-h->f, QPoly(), qpoly({Rat(1)})});  // y^2 - f(x)
  }
  return std::get<WeierstrassModel>(c).defining_poly();
}

bool is_on_curve(const CurveModel& c, const Rat& x, const Rat& y) {
  return poly::bi_eval(curve_relation(c), x, y) == 0;
}

AffinePoint::AffinePoint(const CurveModel& c, Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {
  if (!is_on_curve(c, x, y)) throw std::invalid_argument("AffinePoint: coordinates not on the curve");
}

namespace {

// f evaluated at rational-function arguments.
RatFunc eval_qpoly_at(const QPoly& f, const RatFunc& x) {
  RatFunc acc{BiPoly(), BiPoly(qpoly({Rat(1)}))};
  for (int i = f.degree(); i >= 0; --i) {
    // acc = acc * x + f[i]
    acc = RatFunc{acc.num * x.num + x.den * acc.den * qpoly({f.coeff(i)}), acc.den * x.den};
  }
  if (f.degree() < 0) acc.num = BiPoly();
  return acc;
}

RatFunc eval_bipoly_at(const BiPoly& f, const RatFunc& x, const RatFunc& y) {
  RatFunc acc{BiPoly(), BiPoly(qpoly({Rat(1)}))};
  for (int j = f.degree(); j >= 0; --j) {
    RatFunc cj = eval_qpoly_at(f.coeff(j), x);
    // acc = acc * y + cj
    acc = RatFunc{acc.num * y.num * cj.den + cj.num * acc.den * y.den, acc.den * y.den * cj.den};
  }
  return acc;
}

BiPoly reduce_mod(const BiPoly& g, const BiPoly& rel) {
  return g.divmod(rel).second;
}

}  // namespace

MapCheck verify_map(const RationalMap& m) {
  BiPoly rel = curve_relation(m.source);
  for (const RatFunc* comp : {&m.cx, &m.cy}) {
    if (is_zero(reduce_mod(comp->den, rel)) && !is_zero(comp->den))
      throw std::invalid_argument("verify_map: component denominator vanishes on the source curve");
    if (is_zero(comp->den)) throw std::invalid_argument("verify_map: zero denominator");
  }
  BiPoly target_rel = curve_relation(m.target);
  RatFunc subst = eval_bipoly_at(target_rel, m.cx, m.cy);
  BiPoly residue = reduce_mod(subst.num, rel);
  return MapCheck{is_zero(residue), residue};
}

MapImage apply_map(const RationalMap& m, const Rat& px, const Rat& py) {
  if (!is_on_curve(m.source, px, py)) throw std::invalid_argument("apply_map: point not on source curve");
  Rat dx = poly::bi_eval(m.cx.den, px, py);
  Rat dy = poly::bi_eval(m.cy.den, px, py);
  if (dx == 0 || dy == 0) return MapImage{true, Rat(0), Rat(0)};
  Rat qx = poly::bi_eval(m.cx.num, px, py) / dx;
  Rat qy = poly::bi_eval(m.cy.num, px, py) / dy;
  if (!is_on_curve(m.target, qx, qy))
    throw std::logic_error("apply_map: image point not on target curve");
  return MapImage{false, qx, qy};
}

BiPoly plane_model_from_function(const HyperellipticModel& c, const Rat& offset, int k) {
  if (k < 1) throw std::invalid_argument("plane_model_from_function: k must be >= 1");
  // y = s x^k - offset substituted into y^2 - f(x); outer variable s.
  QPoly xk = QPoly::monomial(Rat(1), k);
  BiPoly s = bi_y();
  BiPoly ysub = s * xk - BiPoly(qpoly({offset}));
  BiPoly result = ysub * ysub - BiPoly(c.f);
  if (is_zero(result)) throw std::invalid_argument("plane_model_from_function: substitution vanished");
  // cancel the largest common power of x
  int minord = INT_MAX;
  for (const QPoly& co : result.coeffs()) {
    if (is_zero(co)) continue;
    int ord = 0;
    while (co.coeff(ord) == 0) ++ord;
    minord = std::min(minord, ord);
  }
  if (minord > 0 && minord != INT_MAX) {
    std::vector<QPoly> reduced;
    for (const QPoly& co : result.coeffs()) {
      if (is_zero(co)) {
        reduced.push_back(co);
        continue;
      }
      std::vector<Rat> cc(co.coeffs().begin() + minord, co.coeffs().end());
      reduced.push_back(qpoly(std::move(cc)));
    }
    result = BiPoly(std::move(reduced));
  }
  return result;
}

namespace {

// Writes the rational function as (n0(x) + n1(x) y) / d(x) using the curve
// relation to eliminate higher powers of y; throws for unsupported shapes.
struct TriangularComponent {
  QPoly n0, n1, d;
};

TriangularComponent triangularise(const RatFunc& comp, const BiPoly& rel) {
  BiPoly num = reduce_mod(comp.num, rel);
  BiPoly den = reduce_mod(comp.den, rel);
  if (den.degree() > 0) throw std::invalid_argument("preimages: denominator involves y (unsupported map shape)");
  if (num.degree() > 1) throw std::logic_error("preimages: reduction failed");
  return TriangularComponent{num.coeff(0), num.coeff(1), den.coeff(0)};
}

}  // namespace

std::vector<std::pair<Rat, Rat>> base_locus(const RationalMap& m) {
  const auto* h = std::get_if<HyperellipticModel>(&m.source);
  if (!h) throw std::invalid_argument("base_locus: hyperelliptic source required");
  BiPoly rel = curve_relation(m.source);
  std::vector<std::pair<Rat, Rat>> out;
  for (const RatFunc* comp : {&m.cx, &m.cy}) {
    TriangularComponent t = triangularise(*comp, rel);
    if (t.d.degree() < 1) continue;
    for (const Rat& x0 : poly::rational_roots(t.d)) {
      Rat fy = h->f.eval_same(x0);
      if (!arith::is_square_rational(fy)) continue;
      Rat y0 = arith::sqrt_rational(fy);
      for (const Rat& y : std::initializer_list<Rat>{y0, -y0}) {
        auto pt = std::make_pair(x0, y);
        if (std::find(out.begin(), out.end(), pt) == out.end()) out.push_back(pt);
        if (y0 == 0) break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PreimageResult preimages(const RationalMap& m, const Rat& qx, const Rat& qy) {
  const auto* h = std::get_if<HyperellipticModel>(&m.source);
  if (!h) throw std::invalid_argument("preimages: hyperelliptic source required");
  BiPoly rel = curve_relation(m.source);
  TriangularComponent tx = triangularise(m.cx, rel);
  TriangularComponent ty = triangularise(m.cy, rel);

  PreimageResult res;
  res.base_locus = base_locus(m);

  auto check_and_add = [&](const Rat& x0, const Rat& y0) {
    if (!is_on_curve(m.source, x0, y0)) return;
    MapImage img = apply_map(m, x0, y0);
    if (img.indeterminate) return;
    if (img.x != qx || img.y != qy) return;
    auto pt = std::make_pair(x0, y0);
    if (std::find(res.points.begin(), res.points.end(), pt) == res.points.end()) res.points.push_back(pt);
  };

  // Pick a component to pin down x: prefer one with no y part, else solve
  // for y linearly and substitute into the curve equation.
  auto solve_with = [&](const TriangularComponent& t, const Rat& q) -> std::vector<Rat> {
    std::vector<Rat> xs;
    if (is_zero(t.n1)) {
      QPoly eq = t.n0 - t.d * q;  // n0(x) = q d(x)
      if (is_zero(eq)) throw std::invalid_argument("preimages: constant component (unsupported)");
      for (const Rat& r : poly::rational_roots(eq)) xs.push_back(r);
      return xs;
    }
    // y = (q d - n0)/n1; substitute into y^2 = f
    // (q d - n0)^2 - n1^2 f = 0
    QPoly num = t.d * q - t.n0;
    QPoly eq = num * num - t.n1 * t.n1 * h->f;
    if (is_zero(eq)) throw std::invalid_argument("preimages: degenerate component");
    for (const Rat& r : poly::rational_roots(eq)) xs.push_back(r);
    return xs;
  };

  auto recover_y = [&](const TriangularComponent& t, const Rat& q, const Rat& x0) -> std::vector<Rat> {
    // candidates for y at x0
    if (!is_zero(t.n1) && t.n1.eval_same(x0) != 0) {
      Rat y = (q * t.d.eval_same(x0) - t.n0.eval_same(x0)) / t.n1.eval_same(x0);
      return {y};
    }
    Rat fy = h->f.eval_same(x0);
    if (!arith::is_square_rational(fy)) return {};
    Rat y0 = arith::sqrt_rational(fy);
    if (y0 == 0) return {y0};
    return std::vector<Rat>{y0, -y0};
  };

  const TriangularComponent& pin = is_zero(tx.n1) ? tx : (is_zero(ty.n1) ? ty : tx);
  const Rat& pinq = (&pin == &tx) ? qx : qy;
  const TriangularComponent& other = (&pin == &tx) ? ty : tx;
  const Rat& otherq = (&pin == &tx) ? qy : qx;

  for (const Rat& x0 : solve_with(pin, pinq)) {
    // exclude base-locus x values from the affine solution set
    if (tx.d.eval_same(x0) == 0 || ty.d.eval_same(x0) == 0) continue;
    for (const Rat& y0 : recover_y(other, otherq, x0)) check_and_add(x0, y0);
    for (const Rat& y0 : recover_y(pin, pinq, x0)) check_and_add(x0, y0);
  }
  std::sort(res.points.begin(), res.points.end());
  return res;
}

RationalMap fermat_hyperelliptic_map(int n) {
  FermatCurve fn(n);
  QPoly rhs = qpoly({Rat(1)}) - QPoly::monomial(Rat(4), n);  // -4 x^n + 1
  HyperellipticModel cn(rhs, "C" + std::to_string(n));
  // components in source coords: inner = alpha, outer = beta
  BiPoly alpha = bi_x();
  BiPoly beta = bi_y();
  BiPoly one(qpoly({Rat(1)}));
  BiPoly alphan = BiPoly(QPoly::monomial(Rat(1), n));   // alpha^n
  BiPoly betan = BiPoly::monomial(qpoly({Rat(1)}), n);  // beta^n
  RatFunc cx{alpha * beta, one};
  RatFunc cy{alphan - betan, one};
  return RationalMap{fn, cn, cx, cy, "fermat-to-C" + std::to_string(n)};
}

int rational_points_at_infinity(const HyperellipticModel& c) {
  if (c.odd_degree()) return 1;
  return arith::is_square_rational(c.f.lc()) ? 2 : 0;
}

}  // namespace curvecert::curves

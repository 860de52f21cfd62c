#pragma once

// Curve models (Fermat, hyperelliptic, Weierstrass), point membership,
// rational maps between models, symbolic morphism verification, plane-model
// derivation and preimage computation.

#include "curvecert/parse.hpp"
#include "curvecert/poly.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace curvecert::curves {

using parse::RatFunc;
using poly::BiPoly;
using poly::QPoly;
using poly::Rat;

struct FermatCurve {
  int n;  // x^n + y^n = z^n, n >= 3
  explicit FermatCurve(int n_);
};

// y^2 = f(x), f squarefree of degree >= 3.
struct HyperellipticModel {
  QPoly f;
  int genus;
  std::string name;

  explicit HyperellipticModel(QPoly f_, std::string name_ = "");
  bool odd_degree() const { return f.degree() % 2 == 1; }
};

struct WeierstrassModel {
  Rat a1, a2, a3, a4, a6;
  std::string name;

  WeierstrassModel(Rat a1_, Rat a2_, Rat a3_, Rat a4_, Rat a6_, std::string name_ = "");

  Rat b2() const { return a1 * a1 + 4 * a2; }
  Rat b4() const { return 2 * a4 + a1 * a3; }
  Rat b6() const { return a3 * a3 + 4 * a6; }
  Rat b8() const;
  Rat c4() const { return b2() * b2() - 24 * b4(); }
  Rat c6() const { return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6(); }
  Rat disc() const;

  // y^2 + a1 x y + a3 y - x^3 - a2 x^2 - a4 x - a6 in (inner x, outer y).
  BiPoly defining_poly() const;
};

using CurveModel = std::variant<FermatCurve, HyperellipticModel, WeierstrassModel>;

// The bivariate relation cutting out the affine curve, monic in the outer
// variable (y, or alpha for Fermat models in the chart z = 1).
BiPoly curve_relation(const CurveModel& c);

bool is_on_curve(const CurveModel& c, const Rat& x, const Rat& y);

struct AffinePoint {
  Rat x, y;
  AffinePoint(const CurveModel& c, Rat x_, Rat y_);  // membership checked
};

struct RationalMap {
  CurveModel source;
  CurveModel target;
  RatFunc cx;  // first target coordinate as a function of source coords
  RatFunc cy;  // second target coordinate
  std::string name;
};

struct MapCheck {
  bool ok;
  BiPoly residue;  // zero iff the morphism identity holds
};

// Substitutes the components into the target equation and reduces modulo
// the source relation; ok iff the residue vanishes identically.
MapCheck verify_map(const RationalMap& m);

struct MapImage {
  bool indeterminate;  // a component denominator vanished at the point
  Rat x, y;
};

MapImage apply_map(const RationalMap& m, const Rat& px, const Rat& py);

// Plane model from the degree-4 function g = (y + c)/x^k on y^2 = f(x):
// substitute y = s x^k - c into y^2 - f(x) and cancel the largest common
// power of x.  Result is a polynomial in (r, s) with r = x (inner) and s
// (outer).
BiPoly plane_model_from_function(const HyperellipticModel& c, const Rat& offset, int k);

struct PreimageResult {
  std::vector<std::pair<Rat, Rat>> points;      // affine rational preimages
  std::vector<std::pair<Rat, Rat>> base_locus;  // source points where the map is indeterminate
};

// Rational preimages of the affine target point (qx, qy); the supported
// map shapes have monomial denominators and y-linear numerators.
PreimageResult preimages(const RationalMap& m, const Rat& qx, const Rat& qy);

// Source points where some component denominator vanishes.
std::vector<std::pair<Rat, Rat>> base_locus(const RationalMap& m);

// The Lemma "F_n -> C_n" morphism (alpha, beta) |-> (alpha*beta, alpha^n - beta^n)
// onto C_n : y^2 = -4 x^n + 1.
RationalMap fermat_hyperelliptic_map(int n);

// Rational points at infinity of a hyperelliptic model: one for odd degree,
// two when the leading coefficient is a rational square, none otherwise.
int rational_points_at_infinity(const HyperellipticModel& c);

}  // namespace curvecert::curves

#pragma once

// Number fields Q[t]/(h): element arithmetic in the power basis, minimal
// polynomials via the multiplication endomorphism, quartic Galois-group
// classification through the resolvent cubic, and primitivity of cubic and
// quartic fields.

#include "curvecert/poly.hpp"

#include <string>
#include <vector>

namespace curvecert::numfld {

using poly::QPoly;
using poly::Rat;

// Complete for degrees up to 4: rational roots plus a rational test for a
// quadratic factor.
bool is_irreducible(const QPoly& f);

struct NumberField {
  QPoly h;  // monic irreducible, degree 1..4
  int degree;

  explicit NumberField(QPoly h_);
};

// Coordinates in the power basis 1, t, .., t^(d-1).
struct NFElement {
  std::vector<Rat> c;
};

NFElement nf_from_qpoly(const QPoly& g, const NumberField& K);
NFElement nf_mul(const NFElement& a, const NFElement& b, const NumberField& K);

QPoly minimal_polynomial(const NFElement& e, const NumberField& K);

// y^3 - p y^2 - 4 r y + (4 p r - q^2) for the depressed x^4 + p x^2 + q x + r;
// its discriminant equals disc(f), which is asserted.
QPoly resolvent_cubic(const QPoly& f);

enum class QuarticGaloisType { S4, A4, D4, C4, V4 };

std::string to_string(QuarticGaloisType t);

QuarticGaloisType quartic_galois_group(const QPoly& f);

// Degree 3 is always primitive; degree 4 exactly when the Galois group is
// A4 or S4.
bool is_primitive_field(const NumberField& K);

}  // namespace curvecert::numfld

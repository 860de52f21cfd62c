#pragma once

// Truncated rational power series in a local parameter t, with the
// square-root and reversion routines used for local expansions on curves.

#include "curvecert/poly.hpp"

#include <vector>

namespace curvecert::poly {

class PowerSeries {
 public:
  PowerSeries() : trunc_(1) {}
  PowerSeries(std::vector<Rat> coeffs, int trunc);
  explicit PowerSeries(const Rat& constant, int trunc = 1);

  static PowerSeries t(int trunc);  // the series "t"
  static PowerSeries from_poly(const QPoly& f, int trunc);

  int trunc() const { return trunc_; }
  Rat coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }

  // Index of the first nonzero coefficient, or trunc() if none is
  // visible within the truncation window.
  int valuation() const;
  bool visibly_zero() const { return valuation() >= trunc_; }

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator-() const;
  PowerSeries operator*(const PowerSeries& o) const;
  PowerSeries operator*(const Rat& s) const;

  PowerSeries truncated(int n) const;

  // Multiplicative inverse; requires nonzero constant term.
  PowerSeries inverse() const;

 private:
  std::vector<Rat> c_;
  int trunc_;
  void clip();
};

// g with g^2 = c to the truncation order; the constant term of c must be
// a nonzero rational square, and sign is fixed by the target constant term.
PowerSeries series_sqrt(const PowerSeries& c, const Rat& target_c0);

// Substitute the series u (with u(0) = 0) into the polynomial f.
PowerSeries compose_poly(const QPoly& f, const PowerSeries& u);

// Solve t^2 = c1*u + c2*u^2 + ... for u as a series in t (u has only even
// powers of t); coeffs[j] is the coefficient c_{j+1} of u^{j+1}.  Requires
// c1 != 0.  Used to expand x - alpha in the uniformiser y at a
// Weierstrass place.
PowerSeries revert_even(const QPoly& c, int trunc);

}  // namespace curvecert::poly

#pragma once

// String grammar shared by the library and the CLI: polynomials and
// rational functions in up to two named variables ("4*r^4 + s^2*r^3 + 2*s"),
// curve equations ("y^2 = -4*x^7 + 1"), and divisor expressions
// ("4*P0 + 3*(P1 - P0)").

#include "curvecert/poly.hpp"

#include <map>
#include <string>

namespace curvecert::parse {

using poly::BiPoly;
using poly::QPoly;
using poly::Rat;

struct RatFunc {
  BiPoly num;
  BiPoly den;
};

// Rational function in xvar (inner) and yvar (outer).
RatFunc parse_ratfunc(const std::string& s, const std::string& xvar, const std::string& yvar);

// Polynomial forms; throw if the input has a genuine denominator.
BiPoly parse_bipoly(const std::string& s, const std::string& xvar, const std::string& yvar);
QPoly parse_qpoly(const std::string& s, const std::string& var);

// "y^2 = f(x)" with the given variable names; returns f.
QPoly parse_hyperelliptic_rhs(const std::string& s, const std::string& xvar, const std::string& yvar);

// Integer combination of named places.
std::map<std::string, int> parse_divisor_expr(const std::string& s);

}  // namespace curvecert::parse

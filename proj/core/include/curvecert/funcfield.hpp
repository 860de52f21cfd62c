#pragma once

// The function field Q(x)[y]/(y^2 - f) of a hyperelliptic curve: places
// with rational support, exact valuations, divisors of functions, and
// Riemann-Roch spaces by exact linear algebra on local expansions.

#include "curvecert/curves.hpp"
#include "curvecert/series.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace curvecert::funcfield {

using curves::HyperellipticModel;
using poly::QPoly;
using poly::Rat;

// A degree-1 place (x0, y0) with f(x0) = y0^2 != 0.
struct FinitePlace {
  Rat x, y;
};

// The ramification place above x0 with f(x0) = 0.
struct WeierstrassPlace {
  Rat x;
};

// Places over x = infinity: a single ramified place for odd degree;
// two rational branches (sign = +1/-1 matching y / x^{n/2} -> sign*sqrt(lc))
// for even degree with square leading coefficient.
struct InfinitePlace {
  int sign;  // 0 for the odd-degree place
};

// The single degree-2 place at infinity when deg f is even and lc(f) is
// not a rational square.
struct InfinitePairPlace {};

using Place = std::variant<FinitePlace, WeierstrassPlace, InfinitePlace, InfinitePairPlace>;

int place_degree(const Place& p);
bool place_less(const Place& a, const Place& b);
std::string to_string(const Place& p);

struct PlaceCmp {
  bool operator()(const Place& a, const Place& b) const { return place_less(a, b); }
};

struct Divisor {
  std::map<Place, int, PlaceCmp> coeffs;

  int degree() const;
  int coeff(const Place& p) const;
  Divisor operator+(const Divisor& o) const;
  Divisor operator-(const Divisor& o) const;
  Divisor operator*(int n) const;
  bool operator==(const Divisor& o) const;
  bool effective() const;  // all coefficients >= 0
  std::string str() const;
};

// A function (a(x) + b(x) y) / d(x); d monic, gcd(a, b, d) = 1.
struct FFElement {
  QPoly a, b, d;

  bool is_zero() const;
  std::string str() const;
};

FFElement ff_make(QPoly a, QPoly b, QPoly d);

class FunctionField {
 public:
  explicit FunctionField(HyperellipticModel model);

  const HyperellipticModel& model() const { return c_; }
  int genus() const { return c_.genus; }

  // All places over x = infinity.
  std::vector<Place> infinite_places() const;
  // The places over x = x0; throws when y would be irrational.
  std::vector<Place> places_over(const Rat& x0) const;

  FFElement from_ratfunc(const parse::RatFunc& g) const;
  FFElement mul(const FFElement& g, const FFElement& h) const;
  FFElement inverse(const FFElement& g) const;

  int valuation(const FFElement& g, const Place& p) const;

  // Principal divisor; throws when the support is not rational.
  Divisor divisor_of(const FFElement& g) const;

  // Echelonised basis of L(D) = { g : div(g) + D >= 0 }.
  std::vector<FFElement> riemann_roch_space(const Divisor& D) const;
  int dim_l(const Divisor& D) const;

  // Least k in [1, cap] with k*D principal (D of degree 0), else 0.
  int divisor_class_order(const Divisor& D, int cap) const;

  // Fixed part of the linear system |D|: placewise min of div(g) + D over
  // a basis of L(D); requires dim L(D) >= 1 and rational basis divisors.
  Divisor fixed_part(const Divisor& D) const;

  // div(dx / y): supported at infinity for our models.
  Divisor canonical_divisor() const;

 private:
  HyperellipticModel c_;
};

}  // namespace curvecert::funcfield

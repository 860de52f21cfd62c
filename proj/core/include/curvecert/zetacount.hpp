#pragma once

// Point counts of hyperelliptic reductions over F_{p^k}, local L-polynomials
// via Newton's identities and the functional equation, and Jacobian torsion
// multiples as gcds of local Jacobian orders.

#include "curvecert/curves.hpp"

#include <cstdint>
#include <vector>

namespace curvecert::zetacount {

using curves::HyperellipticModel;
using poly::Int;

// Projective points of the smooth model of y^2 = f(x) over F_{p^k}.
Int count_points(const HyperellipticModel& c, std::uint64_t p, unsigned k);

// Good reduction at odd p: integral f whose reduction keeps both the degree
// and squarefreeness, detected via lc(f) and disc(f).
bool good_reduction(const HyperellipticModel& c, std::uint64_t p);

// The primes of bad reduction (2 together with divisors of lc and disc).
std::vector<std::uint64_t> bad_primes(const HyperellipticModel& c);

struct LPolynomial {
  std::uint64_t p;
  int genus;
  std::vector<Int> c;  // degree 2g, c[0] = 1

  Int eval1() const;  // = #J(F_p)
};

// Builds L_p(T) from N_1..N_g and the functional equation; Weil-bound and
// integrality violations throw.  With deep_check, N_{g+1} is recounted over
// F_{p^{g+1}} and compared against the prediction.
LPolynomial l_polynomial(const HyperellipticModel& c, std::uint64_t p, bool deep_check = false);

// Predicted #C(F_{p^k}) from an L-polynomial.
Int predicted_count(const LPolynomial& L, unsigned k);

Int jacobian_order_mod_p(const HyperellipticModel& c, std::uint64_t p);

// gcd of #J(F_p) over the odd good primes in the list; bad primes are
// skipped, and at least one prime must survive.
Int jacobian_torsion_multiple(const HyperellipticModel& c, const std::vector<std::uint64_t>& primes);

}  // namespace curvecert::zetacount

#include "curvecert/zetacount.hpp"

#include "curvecert/fq.hpp"

#include <stdexcept>

namespace curvecert::zetacount {

using arith::FqElement;
using arith::FqField;
using arith::Rat;
using poly::QPoly;

namespace {

void require_integral(const QPoly& f) {
  for (const Rat& c : f.coeffs())
    if (arith::den(c) != 1) throw std::invalid_argument("zetacount: integral model required");
}

std::vector<FqElement> reduce_coeffs(const QPoly& f, const FqField& F) {
  std::vector<FqElement> out;
  out.reserve(f.coeffs().size());
  for (const Rat& c : f.coeffs()) out.push_back(F.from_int(arith::num(c)));
  return out;
}

}  // namespace

bool good_reduction(const HyperellipticModel& c, std::uint64_t p) {
  if (p == 2) return false;
  require_integral(c.f);
  if (arith::num(Rat(c.f.lc())) % p == 0) return false;
  Rat d = poly::discriminant(c.f);
  return arith::num(d) % p != 0;
}

std::vector<std::uint64_t> bad_primes(const HyperellipticModel& c) {
  require_integral(c.f);
  Int n = 2 * arith::num(Rat(c.f.lc())) * arith::num(poly::discriminant(c.f));
  std::vector<std::uint64_t> out;
  for (const Int& q : poly::factor_integer(abs(n))) {
    std::uint64_t qq = q.convert_to<std::uint64_t>();
    if (out.empty() || out.back() != qq) out.push_back(qq);
  }
  return out;
}

Int count_points(const HyperellipticModel& c, std::uint64_t p, unsigned k) {
  if (!good_reduction(c, p)) throw std::invalid_argument("count_points: bad reduction");
  FqField F(p, k);
  std::vector<FqElement> f = reduce_coeffs(c.f, F);
  Int qm1h = (F.q() - 1) / 2;

  Int count = 0;
  FqElement x = F.zero();
  do {
    FqElement z = F.zero();
    for (size_t i = f.size(); i-- > 0;) z = F.add(F.mul(z, x), f[i]);
    if (z.is_zero()) count += 1;
    else if (F.pow(z, qm1h) == F.one()) count += 2;
  } while (F.next_element(x));

  if (c.odd_degree()) count += 1;
  else if (F.is_square(f.back())) count += 2;
  return count;
}

Int LPolynomial::eval1() const {
  Int s = 0;
  for (const Int& ci : c) s += ci;
  return s;
}

Int predicted_count(const LPolynomial& L, unsigned k) {
  // power sums of the Frobenius eigenvalues from e_i = (-1)^i c_i
  int g2 = 2 * L.genus;
  std::vector<Int> e(g2 + 1, 0);
  e[0] = 1;
  for (int i = 1; i <= g2; ++i) e[i] = (i % 2 == 0) ? L.c[i] : -L.c[i];
  std::vector<Int> s(k + 1, 0);
  for (unsigned n = 1; n <= k; ++n) {
    Int acc = 0;
    for (unsigned i = 1; i < n && static_cast<int>(i) <= g2; ++i) {
      Int term = e[i] * s[n - i];
      acc += (i % 2 == 1) ? term : -term;
    }
    if (static_cast<int>(n) <= g2) acc += (n % 2 == 1 ? Int(n) : Int(-static_cast<long long>(n))) * e[n];
    s[n] = acc;
  }
  Int pk = 1;
  for (unsigned i = 0; i < k; ++i) pk *= L.p;
  return pk + 1 - s[k];
}

LPolynomial l_polynomial(const HyperellipticModel& c, std::uint64_t p, bool deep_check) {
  int g = c.genus;
  std::vector<Int> s(g + 1, 0);  // power sums of eigenvalues
  Int pk = 1;
  for (int k = 1; k <= g; ++k) {
    pk *= p;
    Int N = count_points(c, p, static_cast<unsigned>(k));
    s[k] = pk + 1 - N;
    Int bound = 4 * Int(g) * Int(g) * pk;
    if (s[k] * s[k] > bound) throw std::logic_error("l_polynomial: Weil bound violated");
  }
  // Newton: k e_k = sum_{i=1}^{k} (-1)^{i-1} s_i e_{k-i}
  std::vector<Int> e(g + 1, 0);
  e[0] = 1;
  for (int k = 1; k <= g; ++k) {
    Int acc = 0;
    for (int i = 1; i <= k; ++i) {
      Int term = s[i] * e[k - i];
      acc += (i % 2 == 1) ? term : -term;
    }
    if (acc % k != 0) throw std::logic_error("l_polynomial: non-integral coefficient");
    e[k] = acc / k;
  }
  LPolynomial L;
  L.p = p;
  L.genus = g;
  L.c.assign(2 * g + 1, 0);
  for (int i = 0; i <= g; ++i) L.c[i] = (i % 2 == 0) ? e[i] : -e[i];
  Int pi = 1;
  for (int i = 1; i <= g; ++i) {
    pi *= p;
    L.c[g + i] = pi * L.c[g - i];
  }
  // internal consistency: the polynomial must reproduce the counts it was
  // built from
  Int q = 1;
  for (int k = 1; k <= g; ++k) {
    q *= p;
    if (predicted_count(L, static_cast<unsigned>(k)) != q + 1 - s[k])
      throw std::logic_error("l_polynomial: Newton inversion mismatch");
  }
  if (L.eval1() <= 0) throw std::logic_error("l_polynomial: non-positive Jacobian order");
  if (deep_check) {
    Int actual = count_points(c, p, static_cast<unsigned>(g) + 1);
    if (predicted_count(L, static_cast<unsigned>(g) + 1) != actual)
      throw std::logic_error("l_polynomial: deep count check failed");
  }
  return L;
}

Int jacobian_order_mod_p(const HyperellipticModel& c, std::uint64_t p) {
  return l_polynomial(c, p).eval1();
}

Int jacobian_torsion_multiple(const HyperellipticModel& c, const std::vector<std::uint64_t>& primes) {
  Int g = 0;
  for (std::uint64_t p : primes) {
    if (!good_reduction(c, p)) continue;
    g = arith::gcd_int(g, jacobian_order_mod_p(c, p));
    if (g == 1) break;
  }
  if (g == 0) throw std::invalid_argument("jacobian_torsion_multiple: no good primes in list");
  return g;
}

}  // namespace curvecert::zetacount

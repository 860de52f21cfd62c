#include "curvecert/numfld.hpp"

#include "curvecert/arith.hpp"

#include <stdexcept>

namespace curvecert::numfld {

using poly::qpoly;
using poly::taylor_shift;

namespace {

QPoly make_monic(const QPoly& f) {
  if (poly::is_zero(f)) throw std::domain_error("numfld: zero polynomial");
  return poly::monic(f);
}

// depressed form g(x) = f(x - c3/4) = x^4 + p x^2 + q x + r for monic f
void depress_quartic(const QPoly& f, Rat& p, Rat& q, Rat& r) {
  QPoly g = taylor_shift(f, -f.coeff(3) / 4);
  p = g.coeff(2);
  q = g.coeff(1);
  r = g.coeff(0);
}

// z is a square in Q(sqrt(D))
bool square_in_quadratic(const Rat& z, const Rat& D) {
  if (z == 0) return true;
  return arith::is_square_rational(z) || arith::is_square_rational(z * D);
}

}  // namespace

bool is_irreducible(const QPoly& f) {
  QPoly g = make_monic(f);
  int d = g.degree();
  if (d < 1 || d > 4) throw std::invalid_argument("is_irreducible: degree 1..4 only");
  if (d == 1) return true;
  if (!poly::rational_roots(g).empty()) return false;
  if (d <= 3) return true;

  // a quadratic split (x^2 - s x + u)(x^2 + s x + w) of the depressed form
  // forces z = s^2 to be a rational square root of the cubic below
  Rat p, q, r;
  depress_quartic(g, p, q, r);
  QPoly cubic = qpoly({-q * q, p * p - 4 * r, 2 * p, Rat(1)});
  for (const Rat& z : poly::rational_roots(cubic)) {
    if (z == 0) {
      // s = 0 needs q = 0 and rational u, w with u + w = p, u w = r
      if (arith::is_square_rational(p * p - 4 * r)) return false;
    } else if (z > 0 && arith::is_square_rational(z)) {
      return false;
    }
  }
  return true;
}

NumberField::NumberField(QPoly h_) : h(std::move(h_)), degree(h.degree()) {
  if (degree < 1 || degree > 4) throw std::invalid_argument("NumberField: degree 1..4 only");
  if (h.lc() != 1) throw std::invalid_argument("NumberField: monic polynomial required");
  if (!is_irreducible(h)) throw std::invalid_argument("NumberField: reducible polynomial");
}

NFElement nf_from_qpoly(const QPoly& g, const NumberField& K) {
  QPoly red = g.divmod(K.h).second;
  NFElement e;
  e.c.assign(K.degree, Rat(0));
  for (int i = 0; i <= red.degree(); ++i) e.c[i] = red.coeff(i);
  return e;
}

NFElement nf_mul(const NFElement& a, const NFElement& b, const NumberField& K) {
  return nf_from_qpoly(qpoly(std::vector<Rat>(a.c)) * qpoly(std::vector<Rat>(b.c)), K);
}

QPoly minimal_polynomial(const NFElement& e, const NumberField& K) {
  const int d = K.degree;
  if (static_cast<int>(e.c.size()) != d) throw std::invalid_argument("minimal_polynomial: bad coordinate length");

  // columns of the multiplication-by-e matrix in the power basis
  std::vector<std::vector<Rat>> M(d, std::vector<Rat>(d, Rat(0)));
  QPoly ep = qpoly(std::vector<Rat>(e.c));
  for (int j = 0; j < d; ++j) {
    QPoly col = (ep * QPoly::monomial(Rat(1), j)).divmod(K.h).second;
    for (int i = 0; i <= col.degree(); ++i) M[i][j] = col.coeff(i);
  }

  // characteristic polynomial by Faddeev-LeVerrier
  std::vector<Rat> cp(d + 1, Rat(0));
  cp[d] = 1;
  std::vector<std::vector<Rat>> N(d, std::vector<Rat>(d, Rat(0)));
  for (int i = 0; i < d; ++i) N[i][i] = 1;
  for (int k = 1; k <= d; ++k) {
    // N <- M N
    std::vector<std::vector<Rat>> MN(d, std::vector<Rat>(d, Rat(0)));
    for (int i = 0; i < d; ++i)
      for (int l = 0; l < d; ++l)
        for (int j = 0; j < d; ++j) MN[i][j] += M[i][l] * N[l][j];
    Rat tr = 0;
    for (int i = 0; i < d; ++i) tr += MN[i][i];
    Rat ck = -tr / k;
    cp[d - k] = ck;
    for (int i = 0; i < d; ++i) MN[i][i] += ck;
    N = std::move(MN);
  }

  // the characteristic polynomial is a power of the (irreducible) minimal
  // polynomial, so the radical recovers it
  QPoly m = qpoly({Rat(1)});
  for (const QPoly& fct : poly::yun_factorisation(qpoly(std::move(cp)))) m = m * fct;
  if (d % m.degree() != 0) throw std::logic_error("minimal_polynomial: degree does not divide [K:Q]");
  return m;
}

QPoly resolvent_cubic(const QPoly& f) {
  QPoly g = make_monic(f);
  if (g.degree() != 4) throw std::invalid_argument("resolvent_cubic: quartic required");
  if (!is_irreducible(g)) throw std::invalid_argument("resolvent_cubic: reducible quartic");
  Rat p, q, r;
  depress_quartic(g, p, q, r);
  QPoly res = qpoly({4 * p * r - q * q, -4 * r, -p, Rat(1)});
  if (poly::discriminant(res) != poly::discriminant(g))
    throw std::logic_error("resolvent_cubic: discriminant mismatch");
  return res;
}

std::string to_string(QuarticGaloisType t) {
  switch (t) {
    case QuarticGaloisType::S4: return "S4";
    case QuarticGaloisType::A4: return "A4";
    case QuarticGaloisType::D4: return "D4";
    case QuarticGaloisType::C4: return "C4";
    case QuarticGaloisType::V4: return "V4";
  }
  throw std::logic_error("unreachable");
}

QuarticGaloisType quartic_galois_group(const QPoly& f) {
  QPoly g = make_monic(f);
  QPoly res = resolvent_cubic(g);  // certifies degree and irreducibility
  Rat D = poly::discriminant(g);
  std::vector<Rat> roots = poly::rational_roots(res);

  if (roots.empty())
    return arith::is_square_rational(D) ? QuarticGaloisType::A4 : QuarticGaloisType::S4;
  if (roots.size() == 3) return QuarticGaloisType::V4;

  // one rational root: D4 or C4 by the Kappe-Warren squareness criteria
  Rat p, q, r;
  depress_quartic(g, p, q, r);
  Rat beta = roots[0];
  if (square_in_quadratic(beta * beta - 4 * r, D) && square_in_quadratic(beta - p, D))
    return QuarticGaloisType::C4;
  return QuarticGaloisType::D4;
}

bool is_primitive_field(const NumberField& K) {
  if (K.degree == 3) return true;
  if (K.degree == 4) {
    QuarticGaloisType t = quartic_galois_group(K.h);
    return t == QuarticGaloisType::A4 || t == QuarticGaloisType::S4;
  }
  throw std::invalid_argument("is_primitive_field: degree 3 or 4 required");
}

}  // namespace curvecert::numfld

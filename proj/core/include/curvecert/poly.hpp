#pragma once

// Univariate and bivariate polynomial algebra over exact coefficient
// rings: gcd, resultants, discriminants, squarefree decomposition and
// rational root finding.

#include "curvecert/arith.hpp"

#include <string>
#include <utility>
#include <vector>

namespace curvecert::poly {

using arith::Int;
using arith::Rat;

// Lookup helpers so that templates work both for our own types (found
// via ADL) and for boost rationals (found via the using-declarations).
template <typename T>
T zero_of(const T& sample) {
  using arith::zero_like;
  return zero_like(sample);
}
template <typename T>
bool zb(const T& v) {
  using arith::is_zero;
  return is_zero(v);
}

inline Rat exact_div(const Rat& a, const Rat& b) {
  if (b == 0) throw std::domain_error("exact_div: division by zero");
  return a / b;
}
inline arith::Fp exact_div(const arith::Fp& a, const arith::Fp& b) { return a / b; }

template <typename T>
T ediv(const T& a, const T& b) {
  using poly::exact_div;
  return exact_div(a, b);
}

template <typename T>
class UniPoly;

template <typename T>
bool is_zero(const UniPoly<T>& f) {
  return f.degree() < 0;
}

// Dense univariate polynomial, coefficients stored low degree first with
// no trailing zeros.  The zero polynomial has degree() == -1.
template <typename T>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit UniPoly(const T& constant) : c_{constant} { trim(); }

  static UniPoly monomial(const T& coeff, int deg) {
    std::vector<T> v(static_cast<size_t>(deg) + 1, zero_of(coeff));
    v[deg] = coeff;
    return UniPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }

  const T& operator[](size_t i) const { return c_[i]; }
  T coeff(int i) const {
    if (i < 0 || i > degree()) return zero_of(c_.empty() ? T{} : c_[0]);
    return c_[i];
  }
  const T& lc() const { return c_.back(); }

  UniPoly operator+(const UniPoly& o) const {
    if (c_.empty()) return o;
    if (o.c_.empty()) return *this;
    std::vector<T> r = c_;
    if (o.c_.size() > r.size()) r.resize(o.c_.size(), zero_of(o.c_[0]));
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return UniPoly(std::move(r));
  }
  UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
  UniPoly operator-() const {
    std::vector<T> r = c_;
    for (auto& x : r) x = -x;
    return UniPoly(std::move(r));
  }
  UniPoly operator*(const UniPoly& o) const {
    if (c_.empty() || o.c_.empty()) return UniPoly();
    std::vector<T> r(c_.size() + o.c_.size() - 1, zero_of(c_[0]));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return UniPoly(std::move(r));
  }
  UniPoly operator*(const T& s) const {
    std::vector<T> r = c_;
    for (auto& x : r) x = x * s;
    return UniPoly(std::move(r));
  }

  bool operator==(const UniPoly& o) const { return (*this - o).degree() < 0; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  UniPoly derivative() const {
    if (degree() < 1) return UniPoly();
    std::vector<T> r(c_.size() - 1, zero_of(c_[0]));
    for (size_t i = 1; i < c_.size(); ++i) {
      T m = zero_of(c_[0]);
      for (size_t j = 0; j < i; ++j) m = m + c_[i];
      r[i - 1] = m;
    }
    return UniPoly(std::move(r));
  }

  // Horner evaluation in a (possibly larger) ring U; U must be
  // constructible from T.
  template <typename U>
  U eval(const U& x) const {
    U acc = zero_of(x);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + U(c_[i]);
    return acc;
  }

  T eval_same(const T& x) const {
    T acc = zero_of(x);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // Quotient/remainder; each leading-coefficient division must be exact.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& o) const {
    if (is_zero(o)) throw std::domain_error("UniPoly: division by zero polynomial");
    UniPoly q, r = *this;
    if (r.degree() < o.degree()) return {q, r};
    std::vector<T> qc(static_cast<size_t>(r.degree() - o.degree()) + 1, zero_of(o.c_[0]));
    while (r.degree() >= o.degree() && r.degree() >= 0) {
      T f = ediv(r.lc(), o.lc());
      int sh = r.degree() - o.degree();
      qc[sh] = qc[sh] + f;
      r = r - o * UniPoly::monomial(f, sh);
    }
    return {UniPoly(std::move(qc)), r};
  }

  UniPoly shifted(int k) const {  // multiply by x^k
    if (c_.empty() || k == 0) return *this;
    std::vector<T> r(c_.size() + k, zero_of(c_[0]));
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return UniPoly(std::move(r));
  }

 private:
  std::vector<T> c_;
  void trim() {
    while (!c_.empty() && zb(c_.back())) c_.pop_back();
  }
};

template <typename T>
UniPoly<T> zero_like(const UniPoly<T>&) {
  return UniPoly<T>();
}

namespace detail {
template <typename T>
struct RingOne;
template <>
struct RingOne<Rat> {
  static Rat value() { return Rat(1); }
};
template <typename T>
struct RingOne<UniPoly<T>> {
  static UniPoly<T> value() { return UniPoly<T>(RingOne<T>::value()); }
};
}  // namespace detail

template <typename T>
T ring_one() {
  return detail::RingOne<T>::value();
}

template <typename T>
UniPoly<T> exact_div(const UniPoly<T>& a, const UniPoly<T>& b) {
  auto [q, r] = a.divmod(b);
  if (!is_zero(r)) throw std::domain_error("exact_div: inexact polynomial division");
  return q;
}

// Resultant via fraction-free (Bareiss) elimination of the Sylvester matrix.
template <typename T>
T resultant(const UniPoly<T>& f, const UniPoly<T>& g) {
  if (is_zero(f) || is_zero(g)) throw std::domain_error("resultant: zero polynomial");
  const int m = f.degree(), n = g.degree();
  const T zero = zero_of(f.lc());
  const T one = ring_one<T>();
  if (m == 0 && n == 0) return one;
  if (m == 0) {
    T r = one;
    for (int i = 0; i < n; ++i) r = r * f.lc();
    return r;
  }
  if (n == 0) {
    T r = one;
    for (int i = 0; i < m; ++i) r = r * g.lc();
    return r;
  }
  const int N = m + n;
  std::vector<std::vector<T>> M(N, std::vector<T>(N, zero));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) M[i][i + j] = f.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) M[n + i][i + j] = g.coeff(n - j);
  T prev = one;
  int sign = 1;
  for (int k = 0; k < N - 1; ++k) {
    if (zb(M[k][k])) {
      int piv = -1;
      for (int i = k + 1; i < N; ++i)
        if (!zb(M[i][k])) {
          piv = i;
          break;
        }
      if (piv < 0) return zero;
      std::swap(M[k], M[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) {
        T num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        M[i][j] = ediv(num, prev);
      }
      M[i][k] = zero;
    }
    prev = M[k][k];
  }
  T det = M[N - 1][N - 1];
  return sign < 0 ? -det : det;
}

// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f), d = deg f.
template <typename T>
T discriminant(const UniPoly<T>& f) {
  if (f.degree() < 2) throw std::domain_error("discriminant: degree must be >= 2");
  T d = ediv(resultant(f, f.derivative()), f.lc());
  int e = f.degree() * (f.degree() - 1) / 2;
  return (e % 2 == 1) ? -d : d;
}

using QPoly = UniPoly<Rat>;
using BiPoly = UniPoly<QPoly>;  // outer variable "y", inner variable "x"

QPoly qpoly(std::vector<Rat> coeffs);
QPoly monic(const QPoly& f);
QPoly qgcd(QPoly a, QPoly b);

// f = unit * A^2 * B with A, B monic and B squarefree.
struct SquarefreeSplit {
  Rat unit;
  QPoly square_part;   // A
  QPoly reduced_part;  // B
};
SquarefreeSplit squarefree_decomposition(const QPoly& f);

// Yun squarefree factorisation: f = lc * prod factors[i]^(i+1), factors monic.
std::vector<QPoly> yun_factorisation(const QPoly& f);

std::vector<Rat> rational_roots(const QPoly& f);

// f(a + x) as a polynomial in x.
QPoly taylor_shift(const QPoly& f, const Rat& a);

bool is_squarefree(const QPoly& f);

// Swap the roles of the two variables of a bivariate polynomial.
BiPoly bi_transpose(const BiPoly& f);
Rat bi_eval(const BiPoly& f, const Rat& x, const Rat& y);
QPoly bi_eval_y(const BiPoly& f, const QPoly& y_value);  // substitute a poly in x for y
BiPoly bi_const(const QPoly& f);                         // polynomial in x viewed bivariately
BiPoly bi_y();                                           // the outer variable
BiPoly bi_x();                                           // the inner variable

std::string to_string(const QPoly& f, const std::string& var);
std::string to_string(const BiPoly& f, const std::string& xvar, const std::string& yvar);

// Trial division plus Pollard rho; returns sorted prime factors with multiplicity.
std::vector<Int> factor_integer(Int n);
std::vector<Int> divisors_of(const Int& n);

}  // namespace curvecert::poly

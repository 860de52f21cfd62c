#include "curvecert/funcfield.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <stdexcept>

namespace curvecert::funcfield {

using curves::CurveModel;
using poly::PowerSeries;
using poly::qgcd;
using poly::qpoly;
using poly::taylor_shift;

namespace {

int floordiv(int a, int b) {
  int q = a / b, r = a % b;
  return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

// multiplicity of x0 as a root of g
int mult_of_root(const QPoly& g, const Rat& x0) {
  if (poly::is_zero(g)) throw std::domain_error("mult_of_root: zero polynomial");
  QPoly sh = taylor_shift(g, x0);
  int m = 0;
  while (sh.coeff(m) == 0) ++m;
  return m;
}

}  // namespace

int place_degree(const Place& p) {
  return std::holds_alternative<InfinitePairPlace>(p) ? 2 : 1;
}

bool place_less(const Place& a, const Place& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (const auto* fa = std::get_if<FinitePlace>(&a)) {
    const auto& fb = std::get<FinitePlace>(b);
    if (fa->x != fb.x) return fa->x < fb.x;
    return fa->y < fb.y;
  }
  if (const auto* wa = std::get_if<WeierstrassPlace>(&a))
    return wa->x < std::get<WeierstrassPlace>(b).x;
  if (const auto* ia = std::get_if<InfinitePlace>(&a))
    return ia->sign < std::get<InfinitePlace>(b).sign;
  return false;
}

std::string to_string(const Place& p) {
  if (const auto* f = std::get_if<FinitePlace>(&p))
    return "(" + arith::to_string(f->x) + "," + arith::to_string(f->y) + ")";
  if (const auto* w = std::get_if<WeierstrassPlace>(&p))
    return "W(" + arith::to_string(w->x) + ")";
  if (const auto* i = std::get_if<InfinitePlace>(&p)) {
    if (i->sign == 0) return "inf";
    return i->sign > 0 ? "inf+" : "inf-";
  }
  return "inf2";
}

int Divisor::degree() const {
  int d = 0;
  for (const auto& [p, n] : coeffs) d += n * place_degree(p);
  return d;
}

int Divisor::coeff(const Place& p) const {
  auto it = coeffs.find(p);
  return it == coeffs.end() ? 0 : it->second;
}

Divisor Divisor::operator+(const Divisor& o) const {
  Divisor r = *this;
  for (const auto& [p, n] : o.coeffs) {
    r.coeffs[p] += n;
    if (r.coeffs[p] == 0) r.coeffs.erase(p);
  }
  return r;
}

Divisor Divisor::operator-(const Divisor& o) const { return *this + o * -1; }

Divisor Divisor::operator*(int n) const {
  Divisor r;
  if (n == 0) return r;
  for (const auto& [p, m] : coeffs) r.coeffs[p] = n * m;
  return r;
}

bool Divisor::operator==(const Divisor& o) const {
  return coeffs.size() == o.coeffs.size() &&
         std::equal(coeffs.begin(), coeffs.end(), o.coeffs.begin(),
                    [](const auto& a, const auto& b) {
                      return !place_less(a.first, b.first) && !place_less(b.first, a.first) &&
                             a.second == b.second;
                    });
}

bool Divisor::effective() const {
  for (const auto& [p, n] : coeffs)
    if (n < 0) return false;
  return true;
}

std::string Divisor::str() const {
  if (coeffs.empty()) return "0";
  std::string s;
  for (const auto& [p, n] : coeffs) {
    if (!s.empty()) s += " + ";
    s += std::to_string(n) + "*" + to_string(p);
  }
  return s;
}

bool FFElement::is_zero() const { return poly::is_zero(a) && poly::is_zero(b); }

std::string FFElement::str() const {
  std::string num;
  if (!poly::is_zero(a)) num = poly::to_string(a, "x");
  if (!poly::is_zero(b)) {
    if (!num.empty()) num += " + ";
    num += "(" + poly::to_string(b, "x") + ")*y";
  }
  if (num.empty()) num = "0";
  if (d.degree() == 0 && d.coeff(0) == 1) return num;
  return "(" + num + ")/(" + poly::to_string(d, "x") + ")";
}

FFElement ff_make(QPoly a, QPoly b, QPoly d) {
  if (poly::is_zero(d)) throw std::domain_error("ff_make: zero denominator");
  if (poly::is_zero(a) && poly::is_zero(b)) return FFElement{QPoly(), QPoly(), qpoly({Rat(1)})};
  QPoly g = poly::is_zero(a) ? b : (poly::is_zero(b) ? a : qgcd(a, b));
  g = qgcd(g, d);
  if (g.degree() > 0) {
    a = poly::is_zero(a) ? a : poly::exact_div(a, g);
    b = poly::is_zero(b) ? b : poly::exact_div(b, g);
    d = poly::exact_div(d, g);
  }
  Rat s = Rat(1) / d.lc();
  return FFElement{a * s, b * s, d * s};
}

FunctionField::FunctionField(HyperellipticModel model) : c_(std::move(model)) {}

std::vector<Place> FunctionField::infinite_places() const {
  if (c_.odd_degree()) return {InfinitePlace{0}};
  if (arith::is_square_rational(c_.f.lc())) return {InfinitePlace{-1}, InfinitePlace{1}};
  return {InfinitePairPlace{}};
}

std::vector<Place> FunctionField::places_over(const Rat& x0) const {
  Rat fx = c_.f.eval_same(x0);
  if (fx == 0) return {WeierstrassPlace{x0}};
  if (!arith::is_square_rational(fx))
    throw std::domain_error("places_over: no rational place over x = " + arith::to_string(x0));
  Rat y0 = arith::sqrt_rational(fx);
  return {FinitePlace{x0, -y0}, FinitePlace{x0, y0}};
}

FFElement FunctionField::from_ratfunc(const parse::RatFunc& g) const {
  poly::BiPoly rel = curves::curve_relation(CurveModel(c_));
  poly::BiPoly num = g.num.divmod(rel).second;
  poly::BiPoly den = g.den.divmod(rel).second;
  if (num.degree() > 1 || den.degree() > 1) throw std::logic_error("from_ratfunc: reduction failed");
  QPoly n0 = num.coeff(0), n1 = num.coeff(1);
  QPoly e0 = den.coeff(0), e1 = den.coeff(1);
  if (!poly::is_zero(e1)) {
    // rationalise: multiply through by the conjugate e0 - e1 y
    QPoly a = n0 * e0 - n1 * e1 * c_.f;
    QPoly b = n1 * e0 - n0 * e1;
    QPoly d = e0 * e0 - e1 * e1 * c_.f;
    return ff_make(a, b, d);
  }
  return ff_make(n0, n1, e0);
}

FFElement FunctionField::mul(const FFElement& g, const FFElement& h) const {
  return ff_make(g.a * h.a + g.b * h.b * c_.f, g.a * h.b + g.b * h.a, g.d * h.d);
}

FFElement FunctionField::inverse(const FFElement& g) const {
  if (g.is_zero()) throw std::domain_error("inverse of zero");
  QPoly norm = g.a * g.a - g.b * g.b * c_.f;
  return ff_make(g.d * g.a, -g.d * g.b, norm);
}

int FunctionField::valuation(const FFElement& g, const Place& p) const {
  if (g.is_zero()) throw std::domain_error("valuation of zero");
  const int n = c_.f.degree();
  const bool has_a = !poly::is_zero(g.a), has_b = !poly::is_zero(g.b);

  if (const auto* w = std::get_if<WeierstrassPlace>(&p)) {
    if (c_.f.eval_same(w->x) != 0) throw std::invalid_argument("valuation: not a Weierstrass x");
    int v = INT_MAX;
    if (has_a) v = std::min(v, 2 * mult_of_root(g.a, w->x));
    if (has_b) v = std::min(v, 2 * mult_of_root(g.b, w->x) + 1);
    return v - 2 * mult_of_root(g.d, w->x);
  }

  if (const auto* fp = std::get_if<FinitePlace>(&p)) {
    if (c_.f.eval_same(fp->x) != fp->y * fp->y || fp->y == 0)
      throw std::invalid_argument("valuation: invalid finite place");
    int vd = mult_of_root(g.d, fp->x);
    if (!has_b) return mult_of_root(g.a, fp->x) - vd;
    if (!has_a) return mult_of_root(g.b, fp->x) - vd;
    // cancellation is bounded by the order of the norm a^2 - b^2 f
    QPoly norm = g.a * g.a - g.b * g.b * c_.f;
    int cap = mult_of_root(norm, fp->x);
    int trunc = cap + 1;
    PowerSeries ys = poly::series_sqrt(PowerSeries::from_poly(taylor_shift(c_.f, fp->x), trunc), fp->y);
    PowerSeries S = PowerSeries::from_poly(taylor_shift(g.a, fp->x), trunc) +
                    PowerSeries::from_poly(taylor_shift(g.b, fp->x), trunc) * ys;
    if (S.visibly_zero()) throw std::logic_error("valuation: truncation exhausted");
    return S.valuation() - vd;
  }

  if (const auto* ip = std::get_if<InfinitePlace>(&p)) {
    if (ip->sign == 0) {
      if (!c_.odd_degree()) throw std::invalid_argument("valuation: odd-degree place on even model");
      int v = INT_MAX;
      if (has_a) v = std::min(v, -2 * g.a.degree());
      if (has_b) v = std::min(v, -2 * g.b.degree() - n);
      return v + 2 * g.d.degree();
    }
    if (c_.odd_degree() || !arith::is_square_rational(c_.f.lc()))
      throw std::invalid_argument("valuation: split infinite place absent");
    if (!has_b) return g.d.degree() - g.a.degree();
    if (!has_a) return g.d.degree() - g.b.degree() - n / 2;
    QPoly norm = g.a * g.a - g.b * g.b * c_.f;
    int M = std::max(g.a.degree(), g.b.degree() + n / 2);
    int trunc = 2 * M - norm.degree() + 1;
    // f reversed: t^n f(1/t)
    std::vector<Rat> rev(c_.f.coeffs().rbegin(), c_.f.coeffs().rend());
    Rat target = arith::sqrt_rational(c_.f.lc());
    if (ip->sign < 0) target = -target;
    PowerSeries s = poly::series_sqrt(PowerSeries(std::vector<Rat>(rev), trunc), target);
    std::vector<Rat> av(M + 1, Rat(0)), bv(M + 1, Rat(0));
    for (int i = 0; i <= g.a.degree(); ++i) av[M - i] = g.a.coeff(i);
    for (int j = 0; j <= g.b.degree(); ++j) bv[M - j - n / 2] = g.b.coeff(j);
    PowerSeries S = PowerSeries(std::move(av), trunc) + PowerSeries(std::move(bv), trunc) * s;
    if (S.visibly_zero()) throw std::logic_error("valuation: truncation exhausted at infinity");
    return S.valuation() - M + g.d.degree();
  }

  // degree-2 place at infinity: sqrt(lc) irrational, no cancellation
  if (c_.odd_degree() || arith::is_square_rational(c_.f.lc()))
    throw std::invalid_argument("valuation: paired infinite place absent");
  int v = INT_MAX;
  if (has_a) v = std::min(v, -g.a.degree());
  if (has_b) v = std::min(v, -g.b.degree() - n / 2);
  return v + g.d.degree();
}

Divisor FunctionField::divisor_of(const FFElement& g) const {
  if (g.is_zero()) throw std::domain_error("divisor of zero");
  std::set<Rat> xs;
  auto add_roots = [&](const QPoly& h) {
    if (h.degree() < 1) return;
    for (const Rat& r : poly::rational_roots(h)) xs.insert(r);
  };
  add_roots(g.d);
  if (!poly::is_zero(g.a) && !poly::is_zero(g.b)) add_roots(g.a * g.a - g.b * g.b * c_.f);
  else if (!poly::is_zero(g.a)) add_roots(g.a);
  else {
    add_roots(g.b);
    add_roots(c_.f);
  }

  Divisor D;
  for (const Rat& x0 : xs)
    for (const Place& p : places_over(x0)) {
      int v = valuation(g, p);
      if (v != 0) D.coeffs[p] = v;
    }
  for (const Place& p : infinite_places()) {
    int v = valuation(g, p);
    if (v != 0) D.coeffs[p] = v;
  }
  if (D.degree() != 0)
    throw std::domain_error("divisor_of: support contains non-rational places");
  return D;
}

namespace {

// Exact null space of the row system; returns an echelonised basis with the
// unknowns in their given order.
std::vector<std::vector<Rat>> null_space(std::vector<std::vector<Rat>> rows, int ncols) {
  int nrows = static_cast<int>(rows.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int cidx = 0; cidx < ncols && r < nrows; ++cidx) {
    int piv = -1;
    for (int i = r; i < nrows; ++i)
      if (rows[i][cidx] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    Rat inv = Rat(1) / rows[r][cidx];
    for (int j = cidx; j < ncols; ++j) rows[r][j] *= inv;
    for (int i = 0; i < nrows; ++i) {
      if (i == r || rows[i][cidx] == 0) continue;
      Rat fct = rows[i][cidx];
      for (int j = cidx; j < ncols; ++j) rows[i][j] -= fct * rows[r][j];
    }
    pivot_col.push_back(cidx);
    ++r;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(ncols, Rat(0));
    v[free] = 1;
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) v[pivot_col[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

struct XGroup {
  bool weier = false;
  Rat beta;          // positive branch when not Weierstrass
  int n_w = 0;       // coefficient at the Weierstrass place
  int n_plus = 0;    // coefficient at (x0, beta)
  int n_minus = 0;   // coefficient at (x0, -beta)
  int m = 0;         // multiplicity of (x - x0) in the common denominator
};

}  // namespace

std::vector<FFElement> FunctionField::riemann_roch_space(const Divisor& D) const {
  if (D.degree() < 0) return {};
  const int n = c_.f.degree();

  std::map<Rat, XGroup> groups;
  int n_inf0 = 0, n_infp = 0, n_infm = 0, n_pair = 0;
  for (const auto& [p, coeff] : D.coeffs) {
    if (const auto* w = std::get_if<WeierstrassPlace>(&p)) {
      if (c_.f.eval_same(w->x) != 0) throw std::invalid_argument("riemann_roch_space: bad place");
      groups[w->x].weier = true;
      groups[w->x].n_w = coeff;
    } else if (const auto* fp = std::get_if<FinitePlace>(&p)) {
      Rat fx = c_.f.eval_same(fp->x);
      if (fx != fp->y * fp->y || fp->y == 0) throw std::invalid_argument("riemann_roch_space: bad place");
      XGroup& gr = groups[fp->x];
      gr.beta = fp->y > 0 ? fp->y : -fp->y;
      if (fp->y > 0) gr.n_plus = coeff;
      else gr.n_minus = coeff;
    } else if (const auto* ip = std::get_if<InfinitePlace>(&p)) {
      if (ip->sign == 0) n_inf0 = coeff;
      else if (ip->sign > 0) n_infp = coeff;
      else n_infm = coeff;
    } else {
      n_pair = coeff;
    }
  }

  QPoly d = qpoly({Rat(1)});
  for (auto& [x0, gr] : groups) {
    if (gr.weier) gr.m = (std::max(0, gr.n_w) + 1) / 2;
    else gr.m = std::max({0, gr.n_plus, gr.n_minus});
    for (int i = 0; i < gr.m; ++i) d = d * qpoly({-x0, Rat(1)});
  }
  const int dd = d.degree();

  // degree bounds at infinity for the ansatz (A(x) + B(x) y) / d(x)
  int DA, DB;
  bool split_inf = false;
  if (c_.odd_degree()) {
    DA = dd + floordiv(n_inf0, 2);
    DB = floordiv(2 * dd + n_inf0 - n, 2);
  } else if (arith::is_square_rational(c_.f.lc())) {
    split_inf = true;
    int nmax = std::max(n_infp, n_infm);
    DA = dd + nmax;
    DB = dd + nmax - n / 2;
  } else {
    DA = dd + n_pair;
    DB = dd + n_pair - n / 2;
  }
  if (DA < -1) DA = -1;
  if (DB < -1) DB = -1;
  const int na = DA + 1, nb = DB + 1;
  const int nu = na + nb;
  if (nu == 0) return {};

  std::vector<std::vector<Rat>> rows;
  auto add_rows_from_expansions = [&](const std::vector<std::vector<Rat>>& contrib, int req) {
    // contrib[u] = local expansion coefficients (length >= req) of unknown u
    for (int l = 0; l < req; ++l) {
      std::vector<Rat> row(nu, Rat(0));
      bool nonzero = false;
      for (int u = 0; u < nu; ++u) {
        row[u] = contrib[u][l];
        if (row[u] != 0) nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  };

  for (const auto& [x0, gr] : groups) {
    if (gr.weier) {
      int req = 2 * gr.m - gr.n_w;  // required valuation of A + B y at the place
      if (req <= 0) continue;
      // A contributes at even orders 2j, B at odd orders 2j+1
      for (int j = 0; 2 * j < req; ++j) {
        std::vector<Rat> row(nu, Rat(0));
        for (int i = j; i <= DA; ++i) {
          // coefficient of t^j in (t + x0)^i
          Rat c = 0;
          QPoly sh = taylor_shift(QPoly::monomial(Rat(1), i), x0);
          c = sh.coeff(j);
          row[i] = c;
        }
        if (std::any_of(row.begin(), row.end(), [](const Rat& v) { return v != 0; })) rows.push_back(std::move(row));
      }
      for (int j = 0; 2 * j + 1 < req; ++j) {
        std::vector<Rat> row(nu, Rat(0));
        for (int i = j; i <= DB; ++i) {
          QPoly sh = taylor_shift(QPoly::monomial(Rat(1), i), x0);
          row[na + i] = sh.coeff(j);
        }
        if (std::any_of(row.begin(), row.end(), [](const Rat& v) { return v != 0; })) rows.push_back(std::move(row));
      }
      continue;
    }
    for (int sign : {1, -1}) {
      int np = sign > 0 ? gr.n_plus : gr.n_minus;
      int req = gr.m - np;
      if (req <= 0) continue;
      PowerSeries ys =
          poly::series_sqrt(PowerSeries::from_poly(taylor_shift(c_.f, x0), req), sign > 0 ? gr.beta : -gr.beta);
      std::vector<std::vector<Rat>> contrib(nu, std::vector<Rat>(req, Rat(0)));
      for (int i = 0; i <= DA; ++i) {
        QPoly sh = taylor_shift(QPoly::monomial(Rat(1), i), x0);
        for (int l = 0; l < req; ++l) contrib[i][l] = sh.coeff(l);
      }
      for (int j = 0; j <= DB; ++j) {
        QPoly sh = taylor_shift(QPoly::monomial(Rat(1), j), x0);
        PowerSeries prod = PowerSeries::from_poly(sh, req) * ys;
        for (int l = 0; l < req; ++l) contrib[na + j][l] = prod.coeff(l);
      }
      add_rows_from_expansions(contrib, req);
    }
  }

  if (split_inf) {
    int M = std::max(DA, DB + n / 2);
    if (M >= 0) {
      for (int sign : {1, -1}) {
        int np = sign > 0 ? n_infp : n_infm;
        int req = M - dd - np;
        if (req <= 0) continue;
        std::vector<Rat> rev(c_.f.coeffs().rbegin(), c_.f.coeffs().rend());
        Rat target = arith::sqrt_rational(c_.f.lc());
        if (sign < 0) target = -target;
        PowerSeries s = poly::series_sqrt(PowerSeries(std::vector<Rat>(rev), req), target);
        std::vector<std::vector<Rat>> contrib(nu, std::vector<Rat>(req, Rat(0)));
        for (int i = 0; i <= DA; ++i) {
          int e = M - i;  // valuation of the x^i term in t = 1/x, scaled by t^M
          if (e < req) contrib[i][e] = 1;
        }
        for (int j = 0; j <= DB; ++j) {
          int e = M - j - n / 2;
          for (int l = e; l < req; ++l) contrib[na + j][l] = s.coeff(l - e);
        }
        add_rows_from_expansions(contrib, req);
      }
    }
  }

  std::vector<std::vector<Rat>> kernel = null_space(std::move(rows), nu);
  std::vector<FFElement> basis;
  for (const auto& v : kernel) {
    std::vector<Rat> ac(v.begin(), v.begin() + na);
    std::vector<Rat> bc(v.begin() + na, v.end());
    basis.push_back(ff_make(qpoly(std::move(ac)), qpoly(std::move(bc)), d));
  }
  return basis;
}

int FunctionField::dim_l(const Divisor& D) const {
  return static_cast<int>(riemann_roch_space(D).size());
}

int FunctionField::divisor_class_order(const Divisor& D, int cap) const {
  if (D.degree() != 0) throw std::invalid_argument("divisor_class_order: degree must be 0");
  for (int k = 1; k <= cap; ++k)
    if (dim_l(D * k) >= 1) return k;
  return 0;
}

Divisor FunctionField::fixed_part(const Divisor& D) const {
  std::vector<FFElement> basis = riemann_roch_space(D);
  if (basis.empty()) throw std::invalid_argument("fixed_part: empty linear system");
  bool first = true;
  Divisor F;
  for (const FFElement& g : basis) {
    Divisor E = divisor_of(g) + D;
    if (!E.effective()) throw std::logic_error("fixed_part: non-effective member divisor");
    if (first) {
      F = E;
      first = false;
      continue;
    }
    Divisor next;
    for (const auto& [p, m] : F.coeffs) {
      int k = std::min(m, E.coeff(p));
      if (k != 0) next.coeffs[p] = k;
    }
    F = next;
  }
  return F;
}

Divisor FunctionField::canonical_divisor() const {
  Divisor K;
  int g = genus();
  if (c_.odd_degree()) {
    if (2 * g - 2 != 0) K.coeffs[InfinitePlace{0}] = 2 * g - 2;
  } else if (arith::is_square_rational(c_.f.lc())) {
    if (g - 1 != 0) {
      K.coeffs[InfinitePlace{-1}] = g - 1;
      K.coeffs[InfinitePlace{1}] = g - 1;
    }
  } else {
    if (g - 1 != 0) K.coeffs[InfinitePairPlace{}] = g - 1;
  }
  return K;
}

}  // namespace curvecert::funcfield

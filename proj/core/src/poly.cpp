#include "curvecert/poly.hpp"

#include <algorithm>
#include <map>

namespace curvecert::poly {

QPoly qpoly(std::vector<Rat> coeffs) { return QPoly(std::move(coeffs)); }

QPoly monic(const QPoly& f) {
  if (is_zero(f)) return f;
  return f * (Rat(1) / f.lc());
}

QPoly qgcd(QPoly a, QPoly b) {
  while (!is_zero(b)) {
    auto [q, r] = a.divmod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

bool is_squarefree(const QPoly& f) {
  if (f.degree() <= 1) return !is_zero(f);
  return qgcd(f, f.derivative()).degree() == 0;
}

std::vector<QPoly> yun_factorisation(const QPoly& f) {
  if (is_zero(f)) throw std::domain_error("yun: zero polynomial");
  QPoly g = monic(f);
  std::vector<QPoly> out;
  if (g.degree() == 0) return out;
  QPoly d = g.derivative();
  QPoly a = qgcd(g, d);
  QPoly b = exact_div(g, a);
  QPoly c = exact_div(d, a);
  while (true) {
    QPoly z = c - b.derivative();
    if (is_zero(z)) {
      out.push_back(b);
      break;
    }
    QPoly p = qgcd(b, z);
    out.push_back(p);
    b = exact_div(b, p);
    c = exact_div(z, p);
  }
  return out;
}

SquarefreeSplit squarefree_decomposition(const QPoly& f) {
  if (is_zero(f)) throw std::domain_error("squarefree_decomposition: zero polynomial");
  auto factors = yun_factorisation(f);
  QPoly A = qpoly({Rat(1)});
  QPoly B = qpoly({Rat(1)});
  for (size_t i = 0; i < factors.size(); ++i) {
    size_t mult = i + 1;
    for (size_t j = 0; j < mult / 2; ++j) A = A * factors[i];
    if (mult % 2 == 1) B = B * factors[i];
  }
  return SquarefreeSplit{f.lc(), A, B};
}

namespace {

Int int_pow(Int b, int e) {
  Int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::vector<Int> factor_integer(Int n) {
  std::vector<Int> out;
  if (n < 0) n = -n;
  if (n <= 1) return out;
  for (Int d = 2; d * d <= n && d < 1000000; ++d) {
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  }
  // Pollard rho on any remaining cofactor.
  std::vector<Int> stack;
  if (n > 1) stack.push_back(n);
  while (!stack.empty()) {
    Int m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (m < Int(1000000) * 1000000 || (m < (Int(1) << 63) && arith::is_prime_u64(static_cast<std::uint64_t>(m)))) {
      // below the trial bound squared the cofactor is prime
      out.push_back(m);
      continue;
    }
    Int c = 1, x = 2, y = 2, d = 1;
    while (true) {
      x = (x * x + c) % m;
      y = (y * y + c) % m;
      y = (y * y + c) % m;
      Int diff = x > y ? x - y : y - x;
      d = arith::gcd_int(diff, m);
      if (d == m) {
        ++c;
        x = y = 2;
        continue;
      }
      if (d > 1) break;
    }
    stack.push_back(d);
    stack.push_back(m / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> divisors_of(const Int& n) {
  auto primes = factor_integer(n);
  std::map<Int, int> mult;
  for (auto& p : primes) mult[p]++;
  std::vector<Int> divs = {Int(1)};
  for (auto& [p, e] : mult) {
    std::vector<Int> next;
    for (auto& d : divs)
      for (int i = 0; i <= e; ++i) next.push_back(d * int_pow(p, i));
    divs = std::move(next);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<Rat> rational_roots(const QPoly& f) {
  if (is_zero(f)) throw std::domain_error("rational_roots: zero polynomial");
  std::vector<Rat> out;
  QPoly g = f;
  // factor out x^m
  int m = 0;
  while (g.degree() >= 1 && g.coeff(0) == 0) {
    std::vector<Rat> shifted(g.coeffs().begin() + 1, g.coeffs().end());
    g = qpoly(std::move(shifted));
    ++m;
  }
  if (m > 0) out.push_back(Rat(0));
  if (g.degree() < 1) return out;
  // primitive integral model
  Int lcm_den = 1;
  for (auto& c : g.coeffs()) lcm_den = lcm_den / arith::gcd_int(lcm_den, arith::den(c)) * arith::den(c);
  std::vector<Int> ic;
  for (auto& c : g.coeffs()) ic.push_back(arith::num(c) * (lcm_den / arith::den(c)));
  Int content = 0;
  for (auto& c : ic) content = arith::gcd_int(content, c);
  for (auto& c : ic) c /= content;
  auto p_divs = divisors_of(ic.front());
  auto q_divs = divisors_of(ic.back());
  for (const auto& p : p_divs) {
    for (const auto& q : q_divs) {
      for (int sign : {1, -1}) {
        Rat cand(sign * p, q);
        if (g.eval_same(cand) == 0 && std::find(out.begin(), out.end(), cand) == out.end())
          out.push_back(cand);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

QPoly taylor_shift(const QPoly& f, const Rat& a) {
  // Horner on (x + a): f(a + x) = sum over coefficients from the top.
  QPoly acc;
  QPoly xa = qpoly({a, Rat(1)});
  for (int i = f.degree(); i >= 0; --i) acc = acc * xa + qpoly({f.coeff(i)});
  return acc;
}

BiPoly bi_transpose(const BiPoly& f) {
  int dx = 0;
  for (auto& c : f.coeffs()) dx = std::max(dx, c.degree());
  std::vector<QPoly> cols;
  for (int i = 0; i <= dx; ++i) {
    std::vector<Rat> col;
    for (auto& c : f.coeffs()) col.push_back(c.coeff(i));
    cols.push_back(qpoly(std::move(col)));
  }
  return BiPoly(std::move(cols));
}

Rat bi_eval(const BiPoly& f, const Rat& x, const Rat& y) {
  Rat acc = 0;
  for (size_t i = f.coeffs().size(); i-- > 0;) acc = acc * y + f[i].eval_same(x);
  return acc;
}

QPoly bi_eval_y(const BiPoly& f, const QPoly& y_value) {
  QPoly acc;
  for (size_t i = f.coeffs().size(); i-- > 0;) acc = acc * y_value + f[i];
  return acc;
}

BiPoly bi_const(const QPoly& f) { return BiPoly(f); }

BiPoly bi_y() { return BiPoly::monomial(qpoly({Rat(1)}), 1); }

BiPoly bi_x() { return BiPoly(qpoly({Rat(0), Rat(1)})); }

namespace {

std::string term_str(const Rat& c, const std::string& mono, bool first) {
  std::string s;
  Rat a = c;
  if (a < 0) {
    s += first ? "-" : " - ";
    a = -a;
  } else {
    s += first ? "" : " + ";
  }
  bool unit = (a == 1) && !mono.empty();
  if (!unit) s += arith::to_string(a);
  if (!mono.empty()) {
    if (!unit) s += "*";
    s += mono;
  }
  return s;
}

std::string mono_str(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const QPoly& f, const std::string& var) {
  if (is_zero(f)) return "0";
  std::string s;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    if (f.coeff(i) == 0) continue;
    s += term_str(f.coeff(i), mono_str(var, i), first);
    first = false;
  }
  return s;
}

std::string to_string(const BiPoly& f, const std::string& xvar, const std::string& yvar) {
  bool any = false;
  std::string s;
  for (int j = f.degree(); j >= 0; --j) {
    const QPoly& cj = f.coeff(j);
    for (int i = cj.degree(); i >= 0; --i) {
      if (cj.coeff(i) == 0) continue;
      std::string mono = mono_str(xvar, i);
      std::string ym = mono_str(yvar, j);
      if (!mono.empty() && !ym.empty()) mono += "*" + ym;
      else if (!ym.empty()) mono = ym;
      s += term_str(cj.coeff(i), mono, !any);
      any = true;
    }
  }
  return any ? s : "0";
}

}  // namespace curvecert::poly

#include "curvecert/series.hpp"

#include <stdexcept>

namespace curvecert::poly {

PowerSeries::PowerSeries(std::vector<Rat> coeffs, int trunc) : c_(std::move(coeffs)), trunc_(trunc) {
  if (trunc < 1) throw std::invalid_argument("PowerSeries: truncation must be >= 1");
  clip();
}

PowerSeries::PowerSeries(const Rat& constant, int trunc) : c_{constant}, trunc_(trunc) {
  if (trunc < 1) throw std::invalid_argument("PowerSeries: truncation must be >= 1");
  clip();
}

void PowerSeries::clip() {
  if (static_cast<int>(c_.size()) > trunc_) c_.resize(trunc_);
}

PowerSeries PowerSeries::t(int trunc) { return PowerSeries(std::vector<Rat>{Rat(0), Rat(1)}, trunc); }

PowerSeries PowerSeries::from_poly(const QPoly& f, int trunc) {
  return PowerSeries(f.coeffs(), trunc);
}

int PowerSeries::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return trunc_;
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  int tr = std::min(trunc_, o.trunc_);
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return PowerSeries(std::move(r), tr);
}

PowerSeries PowerSeries::operator-() const {
  std::vector<Rat> r = c_;
  for (auto& x : r) x = -x;
  return PowerSeries(std::move(r), trunc_);
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const { return *this + (-o); }

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  int tr = std::min(trunc_, o.trunc_);
  std::vector<Rat> r(tr, Rat(0));
  for (size_t i = 0; i < c_.size() && static_cast<int>(i) < tr; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size() && static_cast<int>(i + j) < static_cast<size_t>(tr); ++j)
      r[i + j] += c_[i] * o.c_[j];
  }
  return PowerSeries(std::move(r), tr);
}

PowerSeries PowerSeries::operator*(const Rat& s) const {
  std::vector<Rat> r = c_;
  for (auto& x : r) x = x * s;
  return PowerSeries(std::move(r), trunc_);
}

PowerSeries PowerSeries::truncated(int n) const {
  std::vector<Rat> r = c_;
  return PowerSeries(std::move(r), std::min(n, trunc_));
}

PowerSeries PowerSeries::inverse() const {
  if (coeff(0) == 0) throw std::domain_error("PowerSeries: inverse of non-unit");
  std::vector<Rat> r(trunc_, Rat(0));
  Rat c0inv = Rat(1) / coeff(0);
  r[0] = c0inv;
  for (int n = 1; n < trunc_; ++n) {
    Rat s = 0;
    for (int i = 1; i <= n; ++i) s += coeff(i) * r[n - i];
    r[n] = -s * c0inv;
  }
  return PowerSeries(std::move(r), trunc_);
}

PowerSeries series_sqrt(const PowerSeries& c, const Rat& target_c0) {
  Rat c0 = c.coeff(0);
  if (c0 == 0 || !arith::is_square_rational(c0))
    throw std::domain_error("series_sqrt: constant term must be a nonzero rational square");
  Rat g0 = arith::sqrt_rational(c0);
  if (target_c0 != 0) {
    if (g0 != target_c0 && -g0 != target_c0)
      throw std::domain_error("series_sqrt: target does not match a square root of the constant term");
    if (g0 != target_c0) g0 = -g0;
  }
  int tr = c.trunc();
  std::vector<Rat> g(tr, Rat(0));
  g[0] = g0;
  Rat inv2g0 = Rat(1) / (2 * g0);
  for (int n = 1; n < tr; ++n) {
    // (g^2)_n = 2 g0 g_n + sum_{i=1}^{n-1} g_i g_{n-i} = c_n
    Rat s = 0;
    for (int i = 1; i < n; ++i) s += g[i] * g[n - i];
    g[n] = (c.coeff(n) - s) * inv2g0;
  }
  return PowerSeries(std::move(g), tr);
}

PowerSeries compose_poly(const QPoly& f, const PowerSeries& u) {
  if (u.coeff(0) != 0) throw std::invalid_argument("compose_poly: series must have zero constant term");
  PowerSeries acc(Rat(0), u.trunc());
  for (size_t i = f.coeffs().size(); i-- > 0;) acc = acc * u + PowerSeries(f.coeff(static_cast<int>(i)), u.trunc());
  return acc;
}

PowerSeries revert_even(const QPoly& c, int trunc) {
  Rat c1 = c.coeff(0);
  if (c1 == 0) throw std::domain_error("revert_even: c1 must be nonzero");
  // u = (t^2 - c2 u^2 - c3 u^3 - ...) / c1, iterated to the truncation order.
  PowerSeries t2(std::vector<Rat>{Rat(0), Rat(0), Rat(1)}, trunc);
  PowerSeries u = t2 * (Rat(1) / c1);
  for (int it = 0; it < trunc; ++it) {
    PowerSeries rest(Rat(0), trunc);
    PowerSeries up = u * u;
    for (int j = 1; j <= c.degree(); ++j) {
      rest = rest + up * c.coeff(j);
      up = up * u;
    }
    PowerSeries next = (t2 - rest) * (Rat(1) / c1);
    if ((next - u).visibly_zero()) return next;
    u = next;
  }
  return u;
}

}  // namespace curvecert::poly

#include "curvecert/fq.hpp"

#include <algorithm>
#include <stdexcept>

namespace curvecert::arith {

namespace {

using u128 = unsigned __int128;
using Poly = std::vector<std::uint64_t>;  // dense, low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint64_t>(((u128)a[i] * b[j] + r[i + j]) % p);
    }
  }
  // m is monic; classical remainder.
  size_t dm = m.size() - 1;
  while (r.size() > dm) {
    std::uint64_t lead = r.back();
    size_t shift = r.size() - 1 - dm;
    if (lead != 0) {
      for (size_t i = 0; i <= dm; ++i) {
        u128 sub = (u128)lead * m[i] % p;
        std::uint64_t& dst = r[shift + i];
        dst = static_cast<std::uint64_t>((dst + p - (std::uint64_t)sub) % p);
      }
    }
    r.pop_back();
  }
  trim(r);
  return r;
}

Poly poly_powmod(Poly base, Int e, const Poly& m, std::uint64_t p) {
  Poly r = {1};
  while (e > 0) {
    if ((e & 1) != 0) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  auto inv = [p](std::uint64_t x) {
    // p prime
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = static_cast<std::uint64_t>((u128)r * x % p);
      x = static_cast<std::uint64_t>((u128)x * x % p);
      e >>= 1;
    }
    return r;
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    std::uint64_t li = inv(b.back());
    while (a.size() >= b.size()) {
      std::uint64_t c = static_cast<std::uint64_t>((u128)a.back() * li % p);
      size_t shift = a.size() - b.size();
      if (c != 0) {
        for (size_t i = 0; i < b.size(); ++i) {
          u128 sub = (u128)c * b[i] % p;
          a[shift + i] = static_cast<std::uint64_t>((a[shift + i] + p - (std::uint64_t)sub) % p);
        }
      }
      a.pop_back();
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

// Rabin irreducibility: m monic of degree k is irreducible over F_p iff
// x^(p^k) == x (mod m) and gcd(x^(p^(k/t)) - x, m) = 1 for prime t | k.
bool is_irreducible(const Poly& m, std::uint64_t p) {
  unsigned k = static_cast<unsigned>(m.size() - 1);
  Poly x = {0, 1};
  Int pk = 1;
  for (unsigned i = 0; i < k; ++i) pk *= p;
  Poly xq = poly_powmod(x, pk, m, p);
  Poly diff = xq;
  // diff -= x
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = (diff[1] + p - 1) % p;
  trim(diff);
  if (!diff.empty()) return false;
  for (unsigned t = 2; t <= k; ++t) {
    if (k % t != 0) continue;
    bool prime = true;
    for (unsigned d = 2; d * d <= t; ++d)
      if (t % d == 0) prime = false;
    if (!prime) continue;
    Int e = 1;
    for (unsigned i = 0; i < k / t; ++i) e *= p;
    Poly xe = poly_powmod(x, e, m, p);
    if (xe.size() < 2) xe.resize(2, 0);
    xe[1] = (xe[1] + p - 1) % p;
    trim(xe);
    Poly g = poly_gcd(xe, m, p);
    if (!(g.size() == 1)) return false;
  }
  return true;
}

}  // namespace

bool FqElement::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](std::uint64_t x) { return x == 0; });
}

FqField::FqField(std::uint64_t p, unsigned k) : p_(p), k_(k) {
  if (k == 0) throw std::invalid_argument("FqField: k must be >= 1");
  if (!is_prime_u64(p)) throw std::invalid_argument("FqField: p is not prime");
  if (k > 1 && p >= (1ull << 31)) throw std::invalid_argument("FqField: p too large for extension arithmetic");
  if (k == 1) {
    modulus_ = {0, 1};  // x
    return;
  }
  // Lexicographically least monic irreducible: minimise the x^{k-1}
  // coefficient first, then x^{k-2}, ..., then the constant term.
  std::vector<std::uint64_t> tail(k, 0);  // tail[i] = coeff of x^{k-1-i}
  while (true) {
    Poly m(k + 1, 0);
    m[k] = 1;
    for (unsigned i = 0; i < k; ++i) m[k - 1 - i] = tail[i];
    if (is_irreducible(m, p)) {
      modulus_ = m;
      return;
    }
    // increment tail as a base-p counter, least significant last
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0) {
      if (++tail[pos] < p) break;
      tail[pos] = 0;
      --pos;
    }
    if (pos < 0) throw std::logic_error("FqField: no irreducible found");
  }
}

Int FqField::q() const {
  Int r = 1;
  for (unsigned i = 0; i < k_; ++i) r *= p_;
  return r;
}

FqElement FqField::zero() const { return FqElement{this, std::vector<std::uint64_t>(k_, 0)}; }

FqElement FqField::one() const {
  auto e = zero();
  e.c[0] = 1;
  return e;
}

FqElement FqField::from_int(const Int& n) const {
  Int v = n % Int(p_);
  if (v < 0) v += Int(p_);
  auto e = zero();
  e.c[0] = static_cast<std::uint64_t>(v);
  return e;
}

FqElement FqField::make(std::vector<std::uint64_t> coeffs) const {
  if (coeffs.size() != k_) throw std::invalid_argument("FqField::make: wrong coefficient count");
  for (auto& x : coeffs) x %= p_;
  return FqElement{this, std::move(coeffs)};
}

FqElement FqField::add(const FqElement& a, const FqElement& b) const {
  auto r = zero();
  for (unsigned i = 0; i < k_; ++i) r.c[i] = (a.c[i] + b.c[i]) % p_;
  return r;
}

FqElement FqField::sub(const FqElement& a, const FqElement& b) const {
  auto r = zero();
  for (unsigned i = 0; i < k_; ++i) r.c[i] = (a.c[i] + p_ - b.c[i]) % p_;
  return r;
}

FqElement FqField::neg(const FqElement& a) const { return sub(zero(), a); }

std::vector<std::uint64_t> FqField::reduce(std::vector<std::uint64_t> v) const {
  Poly r = poly_mulmod(v, {1}, modulus_, p_);
  r.resize(k_, 0);
  return r;
}

FqElement FqField::mul(const FqElement& a, const FqElement& b) const {
  Poly r = poly_mulmod(a.c, b.c, modulus_, p_);
  r.resize(k_, 0);
  return FqElement{this, std::move(r)};
}

FqElement FqField::pow(const FqElement& a, Int e) const {
  Poly r = poly_powmod(a.c, e, modulus_, p_);
  r.resize(k_, 0);
  return FqElement{this, std::move(r)};
}

FqElement FqField::inverse(const FqElement& a) const {
  if (a.is_zero()) throw std::domain_error("FqField: inverse of zero");
  return pow(a, q() - 2);
}

bool FqField::is_square(const FqElement& a) const {
  if (a.is_zero()) return true;
  if (p_ == 2) return true;
  FqElement r = pow(a, (q() - 1) / 2);
  return r == one();
}

bool FqField::next_element(FqElement& a) const {
  for (unsigned i = 0; i < k_; ++i) {
    if (++a.c[i] < p_) return true;
    a.c[i] = 0;
  }
  return false;
}

bool is_square_in_field(const FqElement& a) {
  if (a.field == nullptr) throw std::invalid_argument("is_square_in_field: detached element");
  return a.field->is_square(a);
}

}  // namespace curvecert::arith

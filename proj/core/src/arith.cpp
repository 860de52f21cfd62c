#include "curvecert/arith.hpp"

#include <boost/multiprecision/integer.hpp>

namespace curvecert::arith {

Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  return boost::multiprecision::sqrt(n);
}

bool is_square_int(const Int& n) {
  if (n < 0) return false;
  Int r = isqrt(n);
  return r * r == n;
}

bool is_square_rational(const Rat& q) {
  if (q == 0) return true;
  if (q < 0) return false;
  return is_square_int(num(q)) && is_square_int(den(q));
}

Rat sqrt_rational(const Rat& q) {
  if (!is_square_rational(q)) throw std::domain_error("not a rational square");
  if (q == 0) return Rat(0);
  return Rat(isqrt(num(q)), isqrt(den(q)));
}

Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

std::string to_string(const Rat& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((u128)a * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (p % q == 0) return p == q;
  }
  std::uint64_t d = p - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is deterministic for all p < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, p);
    if (x == 1 || x == p - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod_u64(x, x, p);
      if (x == p - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Fp::Fp(std::uint64_t p, const Int& value) : p_(p) {
  if (p == 0) throw std::invalid_argument("Fp: zero modulus");
  Int v = value % Int(p);
  if (v < 0) v += Int(p);
  v_ = static_cast<std::uint64_t>(v);
}

void Fp::check(const Fp& o) const {
  if (p_ != o.p_) throw std::invalid_argument("Fp: mixed moduli");
}

Fp Fp::operator+(const Fp& o) const {
  check(o);
  std::uint64_t s = v_ + o.v_;
  if (s >= p_ || s < v_) s -= p_;
  Fp r;
  r.p_ = p_;
  r.v_ = s;
  return r;
}

Fp Fp::operator-(const Fp& o) const {
  check(o);
  Fp r;
  r.p_ = p_;
  r.v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
  return r;
}

Fp Fp::operator*(const Fp& o) const {
  check(o);
  Fp r;
  r.p_ = p_;
  r.v_ = mulmod_u64(v_, o.v_, p_);
  return r;
}

Fp Fp::operator-() const {
  Fp r;
  r.p_ = p_;
  r.v_ = v_ == 0 ? 0 : p_ - v_;
  return r;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
  return pow(p_ - 2);
}

Fp Fp::operator/(const Fp& o) const { return *this * o.inverse(); }

Fp Fp::pow(std::uint64_t e) const {
  Fp r;
  r.p_ = p_;
  r.v_ = powmod_u64(v_, e, p_);
  return r;
}

FpField::FpField(std::uint64_t p) : p_(p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("FpField: modulus is not prime");
}

}  // namespace curvecert::arith

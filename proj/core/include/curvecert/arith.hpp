#pragma once

// Exact scalar arithmetic: arbitrary-precision integers, canonical
// rationals, and prime fields F_p.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace curvecert::arith {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

// Floor of the integer square root of n >= 0.
Int isqrt(const Int& n);

bool is_square_int(const Int& n);

// True iff q = r^2 for some rational r.
bool is_square_rational(const Rat& q);

// Rational square root; throws if q is not a square.
Rat sqrt_rational(const Rat& q);

Int gcd_int(const Int& a, const Int& b);

// Deterministic Miller-Rabin for p < 2^64; larger inputs are rejected.
bool is_prime_u64(std::uint64_t p);

std::string to_string(const Rat& q);

// An element of F_p.  The modulus rides along with the value; mixing
// elements of different fields throws.
class Fp {
 public:
  Fp() : p_(0), v_(0) {}
  Fp(std::uint64_t p, const Int& value);

  std::uint64_t p() const { return p_; }
  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(const Fp& o) const;
  Fp operator-(const Fp& o) const;
  Fp operator*(const Fp& o) const;
  Fp operator/(const Fp& o) const;
  Fp operator-() const;
  bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

 private:
  friend class FpField;
  std::uint64_t p_;
  std::uint64_t v_;
  void check(const Fp& o) const;
};

// Constructs F_p elements; the modulus is certified prime on construction.
class FpField {
 public:
  explicit FpField(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  Fp make(const Int& v) const { return Fp(p_, v); }
  Fp zero() const { return Fp(p_, 0); }
  Fp one() const { return Fp(p_, 1); }

 private:
  std::uint64_t p_;
};

inline Fp zero_like(const Fp& a) { return Fp(a.p(), 0); }
inline Fp one_like(const Fp& a) { return Fp(a.p(), 1); }
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline bool is_zero(const Rat& a) { return a == 0; }
inline bool is_zero(const Fp& a) { return a.is_zero(); }

}  // namespace curvecert::arith

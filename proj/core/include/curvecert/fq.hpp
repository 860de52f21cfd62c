#pragma once

// Extension fields F_{p^k} as polynomial quotients F_p[x]/(m), with the
// modulus m chosen as the lexicographically least monic irreducible of
// degree k (coefficients compared from the x^{k-1} term downward).

#include "curvecert/arith.hpp"

#include <cstdint>
#include <vector>

namespace curvecert::arith {

class FqField;

struct FqElement {
  const FqField* field = nullptr;
  std::vector<std::uint64_t> c;  // length k, coefficients in [0, p)

  bool is_zero() const;
  bool operator==(const FqElement& o) const { return field == o.field && c == o.c; }
  bool operator!=(const FqElement& o) const { return !(*this == o); }
};

class FqField {
 public:
  // p must be an odd prime < 2^31 for k > 1 (any prime < 2^64 for k = 1).
  FqField(std::uint64_t p, unsigned k);

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  Int q() const;  // p^k
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  FqElement zero() const;
  FqElement one() const;
  FqElement from_int(const Int& n) const;
  FqElement make(std::vector<std::uint64_t> coeffs) const;

  FqElement add(const FqElement& a, const FqElement& b) const;
  FqElement sub(const FqElement& a, const FqElement& b) const;
  FqElement neg(const FqElement& a) const;
  FqElement mul(const FqElement& a, const FqElement& b) const;
  FqElement pow(const FqElement& a, Int e) const;
  FqElement inverse(const FqElement& a) const;

  // Euler criterion: a^((q-1)/2) == 1 for nonzero a; zero counts as a square.
  bool is_square(const FqElement& a) const;

  // Iterates through all q field elements in a fixed order.
  // Returns false once the enumeration wraps back to zero.
  bool next_element(FqElement& a) const;

 private:
  std::uint64_t p_;
  unsigned k_;
  std::vector<std::uint64_t> modulus_;  // monic, length k+1

  std::vector<std::uint64_t> reduce(std::vector<std::uint64_t> v) const;
};

bool is_square_in_field(const FqElement& a);

}  // namespace curvecert::arith

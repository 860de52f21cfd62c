#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvecert/arith.hpp"
#include "curvecert/fq.hpp"

using namespace curvecert::arith;

TEST_CASE("integer square roots") {
  CHECK(isqrt(Int(0)) == 0);
  CHECK(isqrt(Int(1)) == 1);
  CHECK(isqrt(Int(15)) == 3);
  CHECK(isqrt(Int(16)) == 4);
  CHECK(isqrt(Int("1000000000000000000000000")) == Int("1000000000000"));

  CHECK(is_square_int(Int(0)));
  CHECK(is_square_int(Int(49)));
  CHECK(!is_square_int(Int(48)));
  CHECK(!is_square_int(Int(-4)));
}

TEST_CASE("rational squares") {
  CHECK(is_square_rational(Rat(9, 4)));
  CHECK(!is_square_rational(Rat(8, 4)));
  CHECK(!is_square_rational(Rat(-9, 4)));
  CHECK(sqrt_rational(Rat(9, 4)) == Rat(3, 2));
  CHECK(sqrt_rational(Rat(0)) == 0);
  CHECK_THROWS(sqrt_rational(Rat(2)));
}

TEST_CASE("primality") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(101));
  CHECK(!is_prime_u64(1));
  CHECK(!is_prime_u64(0));
  CHECK(!is_prime_u64(91));
  // strong pseudoprime to several small bases
  CHECK(!is_prime_u64(3215031751ULL));
  CHECK(is_prime_u64(18446744073709551557ULL));
}

TEST_CASE("prime field arithmetic") {
  FpField F(101);
  Fp a = F.make(55), b = F.make(77);
  CHECK((a + b).value() == 31);
  CHECK((a - b).value() == 79);
  CHECK((a * b).value() == (55 * 77) % 101);
  CHECK((a / b * b) == a);
  CHECK(a.pow(100).value() == 1);
  CHECK(F.make(-1).value() == 100);
  CHECK_THROWS(FpField(91));
}

TEST_CASE("prime power fields") {
  FqField F9(3, 2);
  CHECK(F9.q() == Int(9));
  auto a = F9.from_int(2);
  CHECK(F9.mul(a, a) == F9.one());

  // every nonzero element of F_9 has order dividing 8
  auto e = F9.zero();
  int nonzero = 0;
  while (F9.next_element(e)) {
    if (e.is_zero()) continue;
    ++nonzero;
    CHECK(F9.pow(e, Int(8)) == F9.one());
  }
  CHECK(nonzero == 8);

  // squares: exactly (q-1)/2 nonzero squares
  int squares = 0;
  e = F9.zero();
  while (F9.next_element(e)) {
    if (e.is_zero()) continue;
    if (F9.is_square(e)) ++squares;
  }
  CHECK(squares == 4);

  FqField F125(5, 3);
  auto x = F125.from_int(7);  // = 2
  CHECK(F125.pow(x, Int(124)) == F125.one());
  CHECK(F125.mul(x, F125.inverse(x)) == F125.one());
}

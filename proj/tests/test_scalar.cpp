#include <doctest.h>

#include "qfq/scalar.hpp"

using namespace qfq;

TEST_CASE("Mod5 arithmetic") {
  CHECK(Mod5(7).value() == 2);
  CHECK(Mod5(-1).value() == 4);
  CHECK((Mod5(3) + Mod5(4)).value() == 2);
  CHECK((Mod5(1) - Mod5(3)).value() == 3);
  CHECK((-Mod5(0)).value() == 0);
  for (int a = 1; a < 5; ++a) CHECK((Mod5(a) * Mod5(a).inverse()).value() == 1);
  CHECK_THROWS_AS(Mod5(0).inverse(), DivisionByZero);
}

TEST_CASE("root powers") {
  CHECK(root_power(0) == CycNum::one());
  // 1 + z + z^2 + z^3 + z^4 = 0
  CycNum s;
  for (int k = 0; k < 5; ++k) s += root_power(k);
  CHECK(s.is_zero());
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) CHECK(root_power(a) * root_power(b) == root_power(a + b));
  CHECK(root_power(4).coeffs()[0] == -1);
}

TEST_CASE("times_root agrees with multiplication") {
  const CycNum x(CycNum::Coeffs{Rational(1, 2), Rational(-3), Rational(0), Rational(5, 7)});
  for (int k = 0; k < 5; ++k) CHECK(x.times_root(k) == x * root_power(k));
}

TEST_CASE("field axioms on a few elements") {
  const CycNum a(CycNum::Coeffs{Rational(1), Rational(2), Rational(-1), Rational(1, 3)});
  const CycNum b(CycNum::Coeffs{Rational(0), Rational(-1, 2), Rational(4), Rational(1)});
  const CycNum c = root_power(2) + CycNum(3L);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a * b == b * a);
  CHECK(a * cyc_inv(a) == CycNum::one());
  CHECK(b * cyc_inv(b) == CycNum::one());
  CHECK(cyc_inv(root_power(1)) == root_power(4));
  CHECK_THROWS_AS(cyc_inv(CycNum::zero()), DivisionByZero);
}

TEST_CASE("norm of 1 - zeta is 5") {
  CycNum norm = CycNum::one();
  for (int k = 1; k < 5; ++k) norm *= CycNum::one() - root_power(k);
  CHECK(norm == CycNum(5L));
  CHECK(norm.is_rational());
}

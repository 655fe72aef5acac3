#include <doctest.h>

#include "scup/components.hpp"

using namespace scup;

TEST_CASE("field constants square correctly") {
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK(Scalar::sqrt2() * Scalar::sqrt2() == Scalar(2));
  CHECK(Scalar::sqrt_minus_half() * Scalar::sqrt_minus_half() == Scalar(-1, 2));
  Scalar root_m2 = Scalar::i() * Scalar::sqrt2();
  CHECK(root_m2 * root_m2 == Scalar(-2));
  CHECK(Scalar::one() + Scalar::zero() == Scalar::one());
}

TEST_CASE("zeta reduction") {
  Scalar z = Scalar::zeta();
  CHECK(z * z * z * z == Scalar(-1));
  CHECK(z.inverse() == -(z * z * z));
  CHECK((z - z * z * z) * (z - z * z * z) == Scalar(2));
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Scalar(3) / Scalar(0), DivisionByZero);
}

TEST_CASE("field axioms on random elements") {
  ParamSampler rng(11);
  auto draw = [&] {
    return Scalar::from_coeffs(rng.rational(), rng.rational(), rng.rational(), rng.rational());
  };
  for (int trial = 0; trial < 200; ++trial) {
    Scalar a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    CHECK(a - a == Scalar(0));
  }
}

TEST_CASE("rational elements stay rational") {
  Scalar a(3, 7), b(-2, 5);
  CHECK((a * b + a / b).is_rational());
  CHECK_FALSE(Scalar::i().is_rational());
  CHECK((a * b).to_string() == "-6/35");
}

TEST_CASE("serialization round trip") {
  Scalar s = Scalar::from_coeffs(mpq_class(1, 2), -3, 0, mpq_class(5, 7));
  CHECK(Scalar::parse(s.to_string()) == s);
  CHECK(Scalar::parse("2/4") == Scalar(1, 2));
  CHECK(Scalar::parse("z^2") == Scalar::i());
  CHECK(Scalar::parse("0+1*z+0*z^2+-1*z^3") == Scalar::sqrt2());
  CHECK_THROWS(Scalar::parse("1/0"));
  CHECK_THROWS_AS(Scalar::parse("abc"), ScalarParseError);
}

TEST_CASE("norm and conjugates") {
  Scalar s = Scalar::from_coeffs(1, 2, 0, -1);
  CHECK(Scalar(s.norm()) == s * s.galois(3) * s.galois(5) * s.galois(7));
}

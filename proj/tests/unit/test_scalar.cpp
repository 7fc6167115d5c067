#include "gospace/scalar.hpp"

#include <doctest.h>

#include <random>

using gospace::ParseError;
using gospace::Scalar;

TEST_CASE("scalar parse and print") {
  CHECK(Scalar::parse("3").to_string() == "3");
  CHECK(Scalar::parse("-2/5") == Scalar::rational(-2, 5));
  CHECK(Scalar::parse("4/6").to_string() == "2/3");
  CHECK(Scalar::parse("1/2+3/4i") == Scalar(mpq_class(1, 2), mpq_class(3, 4)));
  CHECK(Scalar::parse("-i") == -Scalar::imaginary_unit());
  CHECK(Scalar::parse("i") == Scalar::imaginary_unit());
  CHECK(Scalar::parse("2*i").to_string() == "2i");
  CHECK(Scalar::parse("1-i").to_string() == "1-i");
  CHECK(Scalar::parse("0/7").to_string() == "0");
  CHECK(Scalar::parse("-0").to_string() == "0");

  CHECK_THROWS_AS(Scalar::parse(""), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("i+1"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("2 "), ParseError);
}

TEST_CASE("scalar arithmetic stays reduced") {
  const Scalar a = Scalar::rational(6, 4);
  CHECK(a.re().get_num() == 3);
  CHECK(a.re().get_den() == 2);
  const Scalar i = Scalar::imaginary_unit();
  CHECK(i * i == Scalar(-1));
  CHECK((Scalar(1) + i) * (Scalar(1) - i) == Scalar(2));
  CHECK(Scalar(1) / (Scalar(1) + i) == Scalar(mpq_class(1, 2), mpq_class(-1, 2)));
  CHECK((Scalar(3) + i).conj() == Scalar(3) - i);
  CHECK((Scalar(3) + i).norm() == 10);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
}

TEST_CASE("scalar print/parse round trip on random gaussian rationals") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  for (int k = 0; k < 500; ++k) {
    const Scalar s(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
    CHECK(Scalar::parse(s.to_string()) == s);
    // canonical form: gcd 1, positive denominator
    CHECK(s.re().get_den() > 0);
    CHECK(gcd(s.re().get_num(), s.re().get_den()) == 1);
  }
}

TEST_CASE("field names") {
  CHECK(gospace::field_from_string("rational") == gospace::Field::rational);
  CHECK(gospace::to_string(gospace::Field::gaussian) == "gaussian");
  CHECK_THROWS(gospace::field_from_string("real"));
}

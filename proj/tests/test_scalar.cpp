#include <doctest.h>

#include <sstream>

#include "periodgeom/scalar.hpp"

using namespace periodgeom;

TEST_SUITE("scalar") {

TEST_CASE("rational arithmetic stays reduced") {
  const Rat a(2, 4);
  CHECK(a.numerator() == BigInt(1));
  CHECK(a.denominator() == BigInt(2));
  CHECK(a + Rat(1, 2) == Rat(1));
  CHECK(Rat(1, 3) * Rat(3, 5) == Rat(1, 5));
  CHECK(Rat(7, 2) - Rat(1, 2) == Rat(3));
  CHECK(Rat(1, 7) / Rat(2, 7) == Rat(1, 2));
  CHECK(Rat(-6, -4) == Rat(3, 2));
}

TEST_CASE("floor and ceiling at negatives and integers") {
  CHECK(Rat(7, 2).floor_int() == BigInt(3));
  CHECK(Rat(7, 2).ceil_int() == BigInt(4));
  CHECK(Rat(-7, 2).floor_int() == BigInt(-4));
  CHECK(Rat(-7, 2).ceil_int() == BigInt(-3));
  CHECK(Rat(5).floor_int() == BigInt(5));
  CHECK(Rat(5).ceil_int() == BigInt(5));
  CHECK(Rat(0).floor_int() == BigInt(0));
}

TEST_CASE("to_double is the quotient of the parts") {
  CHECK(Rat(1, 2).to_double() == 0.5);
  CHECK(Rat(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
  CHECK(Rat(-22, 7).to_double() == doctest::Approx(-22.0 / 7.0).epsilon(1e-16));
}

TEST_CASE("complex division against multiply-back") {
  const RatComplex z(Rat(3, 2), Rat(-1, 3));
  const RatComplex w(Rat(2, 5), Rat(7, 4));
  const RatComplex q = z / w;
  CHECK(q * w == z);
  CHECK(z / z == RatComplex(Rat(1), Rat(0)));
}

TEST_CASE("squared modulus is multiplicative") {
  const RatComplex z(Rat(3), Rat(4));
  const RatComplex w(Rat(1, 2), Rat(-1, 2));
  CHECK(abs2(z) == Rat(25));
  CHECK(abs2(w) == Rat(1, 2));
  CHECK(abs2(z * w) == abs2(z) * abs2(w));
}

TEST_CASE("powers of i have period four") {
  CHECK(i_pow(0) == RatComplex(Rat(1), Rat(0)));
  CHECK(i_pow(1) == RatComplex(Rat(0), Rat(1)));
  CHECK(i_pow(2) == RatComplex(Rat(-1), Rat(0)));
  CHECK(i_pow(3) == RatComplex(Rat(0), Rat(-1)));
  CHECK(i_pow(5) == i_pow(1));
  CHECK(i_pow(-1) == i_pow(3));
  CHECK(i_pow(-6) == i_pow(2));
}

TEST_CASE("rational parser accepts signs and fractions") {
  CHECK(parse_rational("3") == Rat(3));
  CHECK(parse_rational("-3/6") == Rat(-1, 2));
  CHECK(parse_rational("+7/3") == Rat(7, 3));
  CHECK(parse_rational("0") == Rat(0));
  CHECK_THROWS_AS(parse_rational("1/0"), FormatError);
  CHECK_THROWS_AS(parse_rational("abc"), FormatError);
  CHECK_THROWS_AS(parse_rational(""), FormatError);
}

TEST_CASE("complex parser accepts the documented shapes") {
  CHECK(parse_rational_complex("i") == RatComplex(Rat(0), Rat(1)));
  CHECK(parse_rational_complex("-i") == RatComplex(Rat(0), Rat(-1)));
  CHECK(parse_rational_complex("2i") == RatComplex(Rat(0), Rat(2)));
  CHECK(parse_rational_complex("1+i") == RatComplex(Rat(1), Rat(1)));
  CHECK(parse_rational_complex("1/2-3/4i") == RatComplex(Rat(1, 2), Rat(-3, 4)));
  CHECK(parse_rational_complex("5") == RatComplex(Rat(5), Rat(0)));
  CHECK(parse_rational_complex("-2/3+1/7i") == RatComplex(Rat(-2, 3), Rat(1, 7)));
  CHECK_THROWS_AS(parse_rational_complex("1+"), FormatError);
  CHECK_THROWS_AS(parse_rational_complex(""), FormatError);
}

TEST_CASE("printer and parser are inverse on a sample sweep") {
  for (int num = -8; num <= 8; ++num)
    for (int den = 1; den <= 5; ++den) {
      const Rat x(num, den);
      CHECK(parse_rational(to_string(x)) == x);
      for (int im = -3; im <= 3; im += 3) {
        const RatComplex z(x, Rat(im, den));
        CHECK(parse_rational_complex(to_string(z)) == z);
      }
    }
}

TEST_CASE("printed rationals always use the reduced pair") {
  CHECK(to_string(Rat(2, 4)) == "1/2");
  CHECK(to_string(Rat(-2, 4)) == "-1/2");
  CHECK(to_string(Rat(4, 2)) == "2");
  CHECK(to_string(Rat(0, 9)) == "0");
}

TEST_CASE("conjugation fixes the reals and flips the imaginary part") {
  const RatComplex z(Rat(2, 3), Rat(-5, 7));
  CHECK(scalar_conj(z) == RatComplex(Rat(2, 3), Rat(5, 7)));
  CHECK(scalar_conj(Rat(2, 3)) == Rat(2, 3));
  CHECK(scalar_is_zero(RatComplex()));
  CHECK(!scalar_is_zero(z));
}

}  // TEST_SUITE

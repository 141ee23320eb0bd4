#include "doctest.h"

#include "negsq/errors.hpp"
#include "negsq/numeric.hpp"

using namespace negsq;

TEST_CASE("floor and modulus") {
  CHECK(floor_of(make_rational(171, 2)) == 85);
  CHECK(floor_of(make_rational(-1, 2)) == -1);
  CHECK(floor_of(make_rational(-4, 2)) == -2);
  CHECK(floor_of(Rational(7)) == 7);
  CHECK(mod_floor(-2, 16) == 14);
  CHECK(mod_floor(18, 16) == 2);
}

TEST_CASE("rational rendering") {
  CHECK(to_string(make_rational(171, 2)) == "171/2");
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK(terminating_decimal(make_rational(171, 2)) == "85.5");
  CHECK(terminating_decimal(make_rational(558, 5)) == "111.6");
  CHECK(terminating_decimal(make_rational(-1, 40)) == "-0.025");
  CHECK(terminating_decimal(make_rational(1, 3)).empty());
}

TEST_CASE("parsing") {
  CHECK(parse_rational("656/5") == make_rational(656, 5));
  CHECK(parse_rational("-16/5") == make_rational(-16, 5));
  CHECK(parse_rational("10") == 10);
  CHECK(parse_integer("+12") == 12);
  CHECK(parse_integer("123456789012345678901234567890") * 10 ==
        parse_integer("1234567890123456789012345678900"));
  CHECK_THROWS_AS(parse_integer("1.5"), ValidationError);
  CHECK_THROWS_AS(parse_integer("-"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(to_int64(parse_integer("99999999999999999999"), "x"), ValidationError);
}

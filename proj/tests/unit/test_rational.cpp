#include <doctest.h>

#include "unimod/rational.hpp"

#include <stdexcept>

using unimod::Rat;

TEST_SUITE("rational") {

TEST_CASE("arithmetic is exact and canonical") {
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(6, -4).str() == "-3/2");
  CHECK(Rat(4, 2).str() == "2");
  CHECK(Rat(7, 3) * Rat(3, 7) == Rat(1));
  CHECK((Rat(1) / Rat(3)).den() == 3);
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(-7, 2).ceil() == -3);
  CHECK(Rat(5).is_integer());
  CHECK_FALSE(Rat(5, 2).is_integer());
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
  CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("parse accepts fractions, integers and decimals") {
  CHECK(Rat::parse("15535133760578/505245773078238529") ==
        Rat(unimod::Int("15535133760578"), unimod::Int("505245773078238529")));
  CHECK(Rat::parse("-12") == Rat(-12));
  CHECK(Rat::parse("1.407e21") == Rat(unimod::Int("1407000000000000000000")));
  CHECK(Rat::parse("0.25") == Rat(1, 4));
  CHECK_THROWS(Rat::parse("abc"));
  CHECK_THROWS(Rat::parse("1/0"));
  CHECK_THROWS(Rat::parse(""));
}

TEST_CASE("round trip through str") {
  for (const Rat r : {Rat(0), Rat(-3, 7), Rat(unimod::Int("123456789012345678901234567890"), unimod::Int(7))})
    CHECK(Rat::parse(r.str()) == r);
}

TEST_CASE("decimal rendering") {
  CHECK(Rat(1, 3).decimal(3) == "0.333");
  CHECK(Rat::parse("719890853572979520/505245773078238529").decimal(5) == "1.4248");
  CHECK(Rat(0).decimal(4) == "0");
}

TEST_CASE("powers") {
  CHECK(unimod::pow2(16) == Rat(65536));
  CHECK(unimod::pow2(-2) == Rat(1, 4));
  CHECK(unimod::pow(Rat(-2, 3), 3) == Rat(-8, 27));
}

}

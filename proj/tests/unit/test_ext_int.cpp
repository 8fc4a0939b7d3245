#include <doctest.h>

#include <sstream>

#include "tropkit/errors.hpp"
#include "tropkit/ext_int.hpp"

using tropkit::ExtInt;
using tropkit::Integer;

TEST_CASE("infinity orders above every integer") {
  ExtInt inf = ExtInt::infinity();
  CHECK(ExtInt(5) < inf);
  CHECK(ExtInt(Integer("100000000000000000000000")) < inf);
  CHECK(inf == ExtInt::infinity());
  CHECK(min(inf, ExtInt(3)) == ExtInt(3));
  CHECK(max(inf, ExtInt(3)) == inf);
}

TEST_CASE("addition absorbs into infinity") {
  CHECK((ExtInt(2) + ExtInt(3)) == ExtInt(5));
  CHECK((ExtInt(2) + ExtInt::infinity()).is_infinite());
  CHECK((ExtInt::infinity() - Integer(7)).is_infinite());
  CHECK((Integer(3) * ExtInt(-4)) == ExtInt(-12));
  CHECK((Integer(3) * ExtInt::infinity()).is_infinite());
}

TEST_CASE("value of infinity throws") {
  CHECK_THROWS_AS(ExtInt::infinity().value(), tropkit::PreconditionError);
  CHECK(ExtInt(-9).value() == -9);
}

TEST_CASE("int64 narrowing") {
  CHECK(ExtInt(42).to_int64() == 42);
  CHECK_FALSE(ExtInt::infinity().to_int64().has_value());
  CHECK_FALSE(ExtInt(Integer("99999999999999999999999")).to_int64().has_value());
}

TEST_CASE("parse and print") {
  CHECK(tropkit::parse_ext_int("inf") == ExtInt::infinity());
  CHECK(tropkit::parse_ext_int("-17") == ExtInt(-17));
  CHECK_FALSE(tropkit::parse_ext_int("1x").has_value());
  CHECK_FALSE(tropkit::parse_ext_int("").has_value());
  std::ostringstream os;
  os << ExtInt(-3) << ' ' << ExtInt::infinity();
  CHECK(os.str() == "-3 inf");
}

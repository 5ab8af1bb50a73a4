#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "virfock/rational.hpp"

using namespace virfock;

TEST_CASE("rational text round trip") {
  for (const char* s : {"0", "1", "-1", "7", "-7", "1/2", "-3/4", "22/7",
                        "13717421013717421/109739369"}) {
    Rat r = rat_from_string(s);
    CHECK(rat_to_string(r) == s);
  }
}

TEST_CASE("non-canonical input canonicalizes") {
  CHECK(rat_to_string(rat_from_string("2/4")) == "1/2");
  CHECK(rat_to_string(rat_from_string("-6/4")) == "-3/2");
  CHECK(rat_to_string(rat_from_string("0/5")) == "0");
  CHECK(rat_to_string(rat_from_string("4/2")) == "2");
}

TEST_CASE("sign only allowed in leading position") {
  CHECK_THROWS_AS(rat_from_string("-1/-2"), ParseError);
  CHECK_THROWS_AS(rat_from_string("1/-2"), ParseError);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rat_from_string(""), ParseError);
  CHECK_THROWS_AS(rat_from_string("abc"), ParseError);
  CHECK_THROWS_AS(rat_from_string("1.5"), ParseError);
  CHECK_THROWS_AS(rat_from_string("1/2/3"), ParseError);
}

TEST_CASE("exact arithmetic") {
  Rat a = rat_from_string("1/3"), b = rat_from_string("1/6");
  CHECK(rat_to_string(a + b) == "1/2");
  CHECK(rat_to_string(a - b) == "1/6");
  CHECK(rat_to_string(a * b) == "1/18");
  CHECK(rat_to_string(Rat(a / b)) == "2");
}

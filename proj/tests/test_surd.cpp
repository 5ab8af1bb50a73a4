#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "virfock/surd.hpp"

using namespace virfock;

namespace {
bool is_squarefree(long n) {
  for (long p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}
}  // namespace

TEST_CASE("radicand normalization") {
  CHECK(normalize_radicand(24) == std::pair<long, long>{6, 2});
  CHECK(normalize_radicand(1) == std::pair<long, long>{1, 1});
  CHECK(normalize_radicand(18) == std::pair<long, long>{2, 3});
  CHECK(normalize_radicand(49) == std::pair<long, long>{1, 7});
  for (long n = 1; n <= 500; ++n) {
    auto [sf, f] = normalize_radicand(n);
    CHECK(sf * f * f == n);
    CHECK(is_squarefree(sf));
  }
}

TEST_CASE("construction normalizes the radicand") {
  Surd a(Rat(0), Rat(1), 24);
  Surd b(Rat(0), Rat(2), 6);
  CHECK(a == b);
  CHECK(a.radicand() == 6);
  CHECK(a.str() == "0+2*sqrt(6)");
  // perfect-square radicand collapses to a rational
  Surd c(Rat(1), Rat(2), 9);
  CHECK(c.is_rational());
  CHECK(c.str() == "7");
  // zero surd part drops the radicand tag
  Surd d(Rat(3, 2), Rat(0), 5);
  CHECK(d.radicand() == 1);
  CHECK(d == Surd(Rat(3, 2)));
}

TEST_CASE("field axioms in Q(sqrt(2))") {
  std::vector<Surd> xs = {
      Surd(0), Surd(1), Surd(Rat(-2, 3)),
      Surd(Rat(1, 2), Rat(1, 3), 2), Surd(Rat(0), Rat(-5, 7), 2),
      Surd(Rat(4), Rat(1), 2)};
  for (const auto& x : xs)
    for (const auto& y : xs) {
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      for (const auto& z : xs) {
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
      }
      if (!y.is_zero()) CHECK((x / y) * y == x);
    }
  for (const auto& x : xs) {
    CHECK(x + Surd(0) == x);
    CHECK(x * Surd(1) == x);
    CHECK((x - x).is_zero());
  }
}

TEST_CASE("conjugate product is the field norm") {
  Surd x(Rat(3, 2), Rat(-1, 5), 7);
  Surd conj(Rat(3, 2), Rat(1, 5), 7);
  Surd n = x * conj;
  CHECK(n.is_rational());
  CHECK(n.rat_part() == Rat(9, 4) - Rat(7, 25));
}

TEST_CASE("incompatible radicands throw") {
  Surd r2 = sqrt_surd(2), r3 = sqrt_surd(3);
  CHECK_THROWS_AS(r2 + r3, RadicandMismatch);
  CHECK_THROWS_AS(r2 * r3, RadicandMismatch);
  CHECK_THROWS_AS(r2.compare(r3), RadicandMismatch);
  // rationals are compatible with everything
  CHECK((r2 + Surd(1)).str() == "1+1*sqrt(2)");
}

TEST_CASE("exact sign with near-cancellation") {
  // 3 - 2 sqrt(2) > 0 since 9 > 8
  CHECK(Surd(Rat(3), Rat(-2), 2).sign() == 1);
  // 7 - 5 sqrt(2) < 0 since 49 < 50
  CHECK(Surd(Rat(7), Rat(-5), 2).sign() == -1);
  // 239 - 169 sqrt(2) < 0 since 239^2 = 57121 < 2*169^2 = 57122
  CHECK(Surd(Rat(239), Rat(-169), 2).sign() == -1);
  // 577/408 - sqrt(2) > 0 (continued-fraction convergent from above)
  CHECK(Surd(Rat(577, 408), Rat(-1), 2).sign() == 1);
  CHECK(Surd(0).sign() == 0);
  CHECK(Surd(Rat(-1, 1000000)).sign() == -1);
}

TEST_CASE("total order") {
  Surd a = sqrt_surd(2);                 // 1.414...
  Surd b(Rat(3, 2));                     // 1.5
  Surd c(Rat(1), Rat(1, 3), 2);          // 1.471...
  CHECK(a < c);
  CHECK(c < b);
  CHECK(a < b);
  CHECK(a.compare(a) == 0);
}

TEST_CASE("text round trip") {
  for (const char* s : {"0", "-3/4", "1/2+1/3*sqrt(2)", "0+1*sqrt(6)",
                        "-1-2/5*sqrt(10)"}) {
    Surd x = Surd::parse(s);
    CHECK(x.str() == s);
    CHECK(Surd::parse(x.str()) == x);
  }
}

TEST_CASE("sqrt helper") {
  CHECK(sqrt_surd(8).str() == "0+2*sqrt(2)");
  CHECK(sqrt_surd(9) == Surd(3));
  CHECK(sqrt_surd(2) * sqrt_surd(2) == Surd(2));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "virfock/fock.hpp"
#include "virfock/series.hpp"

using namespace virfock;

TEST_CASE("partition numbers") {
  auto p = partition_numbers(10);
  std::vector<long> expect{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  REQUIRE(p.size() == expect.size());
  for (size_t i = 0; i < expect.size(); ++i) CHECK(p[i] == expect[i]);
}

TEST_CASE("euler inverse generates partitions") {
  CharSeries s = euler_inverse(4, 40);  // 1/prod(1-q^i), q in integer steps
  auto p = partition_numbers(10);
  for (int k = 0; k <= 10; ++k) CHECK(s.coeff(4 * k, 0) == Rat(p[k]));
  // step 8: partitions into even parts = partitions of k/2
  CharSeries e = euler_inverse(8, 40);
  CHECK(e.coeff(8, 0) == 1);
  CHECK(e.coeff(4, 0) == 0);
  CHECK(e.coeff(16, 0) == 2);
}

TEST_CASE("series ring operations") {
  CharSeries a(20, 2);
  a.set(0, 0, 1);
  a.set(4, 1, 1);  // 1 + z q
  CharSeries b(20, 2);
  b.set(0, 0, 1);
  b.set(4, -1, Rat(-1));  // 1 - z^{-1} q
  CharSeries prod = a * b;
  CHECK(prod.coeff(0, 0) == 1);
  CHECK(prod.coeff(4, 1) == 1);
  CHECK(prod.coeff(4, -1) == Rat(-1));
  CHECK(prod.coeff(8, 0) == Rat(-1));
  CHECK((a - a).is_zero());
  CHECK(a.shift(2, 1).coeff(6, 2) == 1);
  CHECK(a.scale_q(2).coeff(8, 1) == 1);
  CHECK(a.project_z0().coeff(0, 0) == 1);
  CHECK(a.project_z0().coeff(4, 1) == 0);
  CHECK(a.specialize_z1().coeff(4, 0) == 1);
}

TEST_CASE("reciprocal inverts z-free series") {
  CharSeries s(40, 0);
  s.set(0, 0, 2);
  s.set(4, 0, Rat(-3));
  s.set(12, 0, Rat(1, 5));
  CharSeries r = s.reciprocal();
  CharSeries prod = s * r;
  CHECK(prod == CharSeries::one(40, 0));
  CHECK_THROWS_AS(CharSeries(10, 0).reciprocal(), DomainError);
}

TEST_CASE("even euler product has pentagonal support") {
  // prod(1-x^i) with x = q^2: exponents x^{k(3k-1)/2}, sign (-1)^k
  CharSeries e = product_form(ProductForm::EulerEven, {100, 0});
  std::map<long, long> expect{{0, 1},  {1, -1}, {2, -1}, {5, 1},
                              {7, 1},  {12, -1}};
  for (long x = 0; x <= 12; ++x) {
    long v = expect.count(x) ? expect[x] : 0;
    CHECK(e.coeff(8 * x, 0) == Rat(v));
  }
}

TEST_CASE("free fermion product counts strict half-odd partitions") {
  // prod_{i>=1}(1 + q^{i-1/2}): coefficient of q^{E/4} counts subsets of
  // {1/2, 3/2, ...} with that sum; cross-check against direct enumeration
  CharSeries f = product_form(ProductForm::NegQHalf, {48, 0});
  std::map<long, long> counts;
  for (const auto& v : enumerate_basis(48)) counts[v.energy_quarters()]++;
  for (long q4 = 0; q4 <= 48; ++q4) {
    long c = counts.count(q4) ? counts[q4] : 0;
    CHECK(f.coeff(q4, 0) == Rat(c));
  }
}

TEST_CASE("two-variable product refines the basis count by charge") {
  CharSeries j1 = product_form(ProductForm::Jac1TwoVariable, {48, 6});
  std::map<std::pair<long, int>, long> counts;
  for (const auto& v : enumerate_basis(48))
    counts[{v.energy_quarters(), v.dg()}]++;
  for (long q4 = 0; q4 <= 48; ++q4)
    for (int z = -6; z <= 6; ++z) {
      long c = counts.count({q4, z}) ? counts[{q4, z}] : 0;
      CHECK(j1.coeff(q4, z) == Rat(c));
    }
}

TEST_CASE("sum forms match product forms") {
  SeriesOrders o{60, 6};
  CHECK_FALSE(product_form(ProductForm::Jac1TwoVariable, o)
                  .first_discrepancy(sum_form(SumForm::Jac2TwoVariable, o))
                  .has_value());
  CharSeries parity_sum = sum_form(SumForm::CharHalfEven, {60, 0}) +
                          sum_form(SumForm::CharHalfOdd, {60, 0});
  CHECK_FALSE(parity_sum
                  .first_discrepancy(product_form(ProductForm::NegQHalf, {60, 0}))
                  .has_value());
}

TEST_CASE("jacobi triple product") {
  auto res = jacobi_check(60, 5);
  CHECK(res.ok);
  CHECK_FALSE(res.first_discrepancy.has_value());
}

TEST_CASE("known character values") {
  // c=1/2 characters: q^{1/16} omitted throughout; weight-0 module starts
  // at 1 and has no level-1 state
  CharSeries c0 = known_character_ising0(40);
  CHECK(c0.coeff(0, 0) == 1);
  CHECK(c0.coeff(4, 0) == 0);   // level 1 removed
  CHECK(c0.coeff(8, 0) == 1);   // level 2 state
  CharSeries ch = known_character_ising_half(40);
  CHECK(ch.coeff(2, 0) == 1);   // starts at q^{1/2}
  CHECK(ch.coeff(6, 0) == 1);
  // generic c=1 Verma: q^h/prod(1-q^i)
  CharSeries g = known_character_c1_generic(Rat(9, 4), 60);
  auto p = partition_numbers(8);
  for (int k = 0; k <= 8; ++k) CHECK(g.coeff(9 + 4 * k, 0) == Rat(p[k]));
  // degenerate c=1: (q^{m^2/4} - q^{(m+2)^2/4})/prod(1-q^i)
  CharSeries d1 = known_character_c1_degenerate(1, 60);
  CHECK(d1.coeff(1, 0) == 1);        // h = 1/4
  CHECK(d1.coeff(9, 0) == Rat(p[2] - 1));  // level 2 minus the removed Verma
  CHECK(d1.all_coeffs_nonnegative());
  CHECK(known_character_c1_degenerate(0, 60).all_coeffs_nonnegative());
}

TEST_CASE("first discrepancy respects canonical order") {
  CharSeries a(20, 2), b(20, 2);
  a.set(4, 0, 1);
  b.set(4, 0, 1);
  b.set(8, -1, 1);
  auto d = a.first_discrepancy(b);
  REQUIRE(d.has_value());
  CHECK(d->first == 8);
  CHECK(d->second == -1);
  CHECK_FALSE(a.first_discrepancy(a).has_value());
}

TEST_CASE("serialization is deterministic") {
  CharSeries a(8, 1);
  a.set(0, 0, 1);
  a.set(2, -1, Rat(-1, 2));
  CHECK(a.to_json() == a.to_json());
  CHECK(a.to_csv() == a.to_csv());
  CHECK(a.to_csv().find("-1/2") != std::string::npos);
  CHECK(a.to_json().find("\"q4\"") != std::string::npos);
}

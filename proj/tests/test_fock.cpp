#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "virfock/fock.hpp"

using namespace virfock;

namespace {
// independent count of subsets S of {0,1,...} with sum of (4n+2) <= budget
long count_subsets(long budget, int next = 0) {
  if (4L * next + 2 > budget) return 1;  // only the empty completion
  return count_subsets(budget, next + 1) +
         count_subsets(budget - (4L * next + 2), next + 1);
}
}  // namespace

TEST_CASE("gradings of basic vectors") {
  BasisVector vac;
  CHECK(vac.is_vacuum());
  CHECK(vac.energy_quarters() == 0);
  CHECK(vac.dg() == 0);
  CHECK(vac.degh() == 0);

  BasisVector a({0});
  CHECK(a.energy_quarters() == 2);  // 0 + 1/2 in quarter units
  CHECK(a.dg() == -1);              // even occupation counts -1
  CHECK(a.degh() == 0);

  BasisVector b({1});
  CHECK(b.dg() == 1);
  CHECK(b.degh() == 0);

  BasisVector c({0, 1, 2, 3});
  CHECK(c.energy_quarters() == 32);
  CHECK(c.dg() == 0);
  CHECK(c.degh() == 4);

  // {5} sits in the charge-1 sector, two Heisenberg levels above v_1:
  // energy 22 quarters vs the sector minimum 6, gap 16 quarters = 2 levels
  BasisVector d({5});
  CHECK(d.dg() == 1);
  CHECK(d.energy_quarters() == 22);
  CHECK(d.degh() == 2);
}

TEST_CASE("vacuum-like vectors") {
  CHECK(vacuum_like(0) == BasisVector());
  CHECK(vacuum_like(2) == BasisVector({1, 3}));
  CHECK(vacuum_like(-2) == BasisVector({0, 2}));
  for (int n = -5; n <= 5; ++n) {
    BasisVector v = vacuum_like(n);
    CHECK(v.dg() == n);
    CHECK(v.degh() == 0);
    CHECK(v.energy_quarters() == sector_min_energy_quarters(n));
  }
}

TEST_CASE("sector minimum matches exhaustive enumeration") {
  auto basis = enumerate_basis(60);
  for (int dgv = -3; dgv <= 3; ++dgv) {
    long best = -1;
    for (const auto& v : basis)
      if (v.dg() == dgv && (best < 0 || v.energy_quarters() < best))
        best = v.energy_quarters();
    CHECK(best == sector_min_energy_quarters(dgv));
  }
}

TEST_CASE("basis enumeration counts and order") {
  auto basis = enumerate_basis(48);
  CHECK(static_cast<long>(basis.size()) == count_subsets(48));
  CHECK(std::is_sorted(basis.begin(), basis.end()));
  for (size_t i = 0; i + 1 < basis.size(); ++i)
    CHECK(basis[i].energy_quarters() <= basis[i + 1].energy_quarters());
  for (long q : {0L, 2L, 12L, 24L})
    CHECK(static_cast<long>(enumerate_basis(q).size()) == count_subsets(q));
}

TEST_CASE("filtered enumeration") {
  auto charged = enumerate_basis(48, BasisFilter{2, std::nullopt});
  CHECK(!charged.empty());
  for (const auto& v : charged) CHECK(v.dg() == 2);
  auto odd = enumerate_basis(48, BasisFilter{std::nullopt, 1});
  for (const auto& v : odd) CHECK(v.parity() == 1);
  auto all = enumerate_basis(48);
  size_t matching = 0;
  for (const auto& v : all)
    if (v.dg() == 2) ++matching;
  CHECK(matching == charged.size());
}

TEST_CASE("clifford action on occupation sets") {
  State vac = State::monomial(BasisVector());
  // phi_{-1/2} |0> = {0}
  CHECK(apply_clifford(-1, vac) == State::monomial(BasisVector({0})));
  // phi_{1/2} |0> = 0
  CHECK(apply_clifford(1, vac).is_zero());
  // creation below an existing occupation picks up the crossing sign:
  // phi_{-1/2} {1} = -{0,1} (one larger occupation crossed)
  CHECK(apply_clifford(-1, State::monomial(BasisVector({1}))) ==
        State::monomial(BasisVector({0, 1}), Surd(-1)));
  // creation above: phi_{-7/2} {0,1} = +{0,1,3}
  CHECK(apply_clifford(-7, State::monomial(BasisVector({0, 1}))) ==
        State::monomial(BasisVector({0, 1, 3})));
  // annihilation removes its occupation with the same crossing sign
  CHECK(apply_clifford(3, State::monomial(BasisVector({0, 1}))) ==
        State::monomial(BasisVector({0})));
  CHECK(apply_clifford(1, State::monomial(BasisVector({0, 1}))) ==
        State::monomial(BasisVector({1}), Surd(-1)));
  // double creation vanishes
  CHECK(apply_clifford(-1, apply_clifford(-1, vac)).is_zero());
}

TEST_CASE("anticommutation relations on a small window") {
  auto basis = enumerate_basis(24);
  for (int ta = -7; ta <= 7; ta += 2)
    for (int tb = -7; tb <= 7; tb += 2)
      for (const auto& v : basis) {
        State sv = State::monomial(v);
        State anti = apply_clifford(ta, apply_clifford(tb, sv)) +
                     apply_clifford(tb, apply_clifford(ta, sv));
        if (ta == -tb)
          CHECK(anti == sv);
        else
          CHECK(anti.is_zero());
      }
}

TEST_CASE("state arithmetic") {
  State s;
  s.add_term(BasisVector({0}), Surd(Rat(1, 2)));
  s.add_term(BasisVector({1}), Surd(Rat(1, 3)));
  s.add_term(BasisVector({0}), Surd(Rat(-1, 2)));
  CHECK(s.size() == 1);  // cancelled term dropped
  auto mono = s.as_monomial();
  REQUIRE(mono.has_value());
  CHECK(mono->first == BasisVector({1}));
  CHECK(mono->second == Surd(Rat(1, 3)));
  CHECK(s.coeff(BasisVector({0})).is_zero());

  State t = s;
  t *= Surd(3);
  CHECK(t == State::monomial(BasisVector({1})));
  CHECK((t - t).is_zero());
  t += State::monomial(BasisVector({2}), sqrt_surd(2));
  CHECK_FALSE(t.as_monomial().has_value());
}

TEST_CASE("string forms") {
  CHECK(BasisVector().str() == "|0>");
  CHECK(BasisVector({0, 2, 5}).str() == "phi[5]phi[2]phi[0]|0>");
  CHECK(basis_from_json_array({5, 0, 2}) == BasisVector({0, 2, 5}));
  CHECK_THROWS_AS(basis_from_json_array({1, 1}), DomainError);
  CHECK_THROWS_AS(basis_from_json_array({-1}), DomainError);
}

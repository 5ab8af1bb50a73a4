#ifndef VIRFOCK_FOCK_HPP
#define VIRFOCK_FOCK_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "virfock/surd.hpp"

namespace virfock {

// Monomial phi_{-n_k-1/2}...phi_{-n_1-1/2}|0> stored as the strictly
// increasing occupation list {n_1 < ... < n_k}; empty list is |0>.
class BasisVector {
 public:
  BasisVector() = default;
  explicit BasisVector(std::vector<int> occ);

  const std::vector<int>& occupations() const { return occ_; }
  bool is_vacuum() const { return occ_.empty(); }
  int length() const { return static_cast<int>(occ_.size()); }

  // sum of (n_i + 1/2), in quarter units
  long energy_quarters() const;
  int parity() const { return length() % 2; }
  // #odd occupations - #even occupations
  int dg() const;
  // level within the charge sector: (energy - energy(vacuum_like(dg)))/2
  long degh() const;

  bool contains(int n) const;

  bool operator==(const BasisVector& o) const { return occ_ == o.occ_; }
  // graded order: energy first, then lexicographic on occupations
  bool operator<(const BasisVector& o) const;

  // "phi[n_k]...phi[n_1]|0>" with occupations in decreasing order
  std::string str() const;

 private:
  std::vector<int> occ_;
};

struct GradingRecord {
  int parity;
  int length;
  int dg;
  long degh;
  long energy_quarters;
};

GradingRecord gradings(const BasisVector& v);

// v_0 = {}, v_n = {1,3,...,2n-1} (n>0), v_{-n} = {0,2,...,2n-2} (n>0)
BasisVector vacuum_like(int n);

// minimal energy in the charge-dg sector, quarter units: 4(n^2) +- 2n
long sector_min_energy_quarters(int dg);

// Finite sparse linear combination of basis monomials with Surd coefficients.
class State {
 public:
  using Terms = std::map<BasisVector, Surd>;

  State() = default;
  static State zero() { return State(); }
  static State monomial(BasisVector v, Surd c = Surd(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const BasisVector& v, const Surd& c);
  State& operator+=(const State& o);
  State& operator-=(const State& o);
  State& operator*=(const Surd& c);
  friend State operator+(State x, const State& y) { return x += y; }
  friend State operator-(State x, const State& y) { return x -= y; }
  friend State operator*(const Surd& c, State x) { return x *= c; }

  bool operator==(const State& o) const { return terms_ == o.terms_; }

  // coefficient of v (zero if absent)
  Surd coeff(const BasisVector& v) const;

  // nullopt unless this = c*v for a single monomial v
  std::optional<std::pair<BasisVector, Surd>> as_monomial() const;

  std::string str() const;

 private:
  Terms terms_;
};

// phi_m for m in Z+1/2, passed as twice_m = 2m (odd). Creation for m<0,
// annihilation for m>0; sign (-1)^{#occupations greater than the target}.
State apply_clifford(int twice_m, const State& s);
State apply_clifford(int twice_m, const BasisVector& v);

struct BasisFilter {
  std::optional<int> dg;
  std::optional<int> parity;
};

// All canonical basis vectors with energy <= max_energy_quarters matching
// the filter, graded by energy then lexicographic.
std::vector<BasisVector> enumerate_basis(long max_energy_quarters,
                                         const BasisFilter& filter = {});

BasisVector basis_from_json_array(const std::vector<int>& occ);

}  // namespace virfock

#endif

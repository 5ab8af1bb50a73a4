#include "virfock/fock.hpp"

#include <algorithm>

namespace virfock {

BasisVector::BasisVector(std::vector<int> occ) : occ_(std::move(occ)) {
  for (size_t i = 0; i < occ_.size(); ++i) {
    if (occ_[i] < 0) throw DomainError("negative occupation index");
    if (i > 0 && occ_[i] <= occ_[i - 1])
      throw DomainError("occupations must be strictly increasing");
  }
}

long BasisVector::energy_quarters() const {
  long e = 0;
  for (int n : occ_) e += 4L * n + 2;
  return e;
}

int BasisVector::dg() const {
  int d = 0;
  for (int n : occ_) d += (n % 2) ? 1 : -1;
  return d;
}

long sector_min_energy_quarters(int dg) {
  // energy(v_n) = n^2 + n/2, valid for both signs of n; quarter units
  long n = dg;
  return 4 * n * n + 2 * n;
}

long BasisVector::degh() const {
  long gap = energy_quarters() - sector_min_energy_quarters(dg());
  return gap / 8;  // one level = 2 energy units = 8 quarters
}

bool BasisVector::contains(int n) const {
  return std::binary_search(occ_.begin(), occ_.end(), n);
}

bool BasisVector::operator<(const BasisVector& o) const {
  long ea = energy_quarters(), eb = o.energy_quarters();
  if (ea != eb) return ea < eb;
  return occ_ < o.occ_;
}

std::string BasisVector::str() const {
  if (occ_.empty()) return "|0>";
  std::string s;
  for (auto it = occ_.rbegin(); it != occ_.rend(); ++it)
    s += "phi[" + std::to_string(*it) + "]";
  return s + "|0>";
}

GradingRecord gradings(const BasisVector& v) {
  return GradingRecord{v.parity(), v.length(), v.dg(), v.degh(),
                       v.energy_quarters()};
}

BasisVector vacuum_like(int n) {
  std::vector<int> occ;
  if (n > 0)
    for (int i = 1; i <= 2 * n - 1; i += 2) occ.push_back(i);
  else if (n < 0)
    for (int i = 0; i <= -2 * n - 2; i += 2) occ.push_back(i);
  return BasisVector(std::move(occ));
}

State State::monomial(BasisVector v, Surd c) {
  State s;
  if (!c.is_zero()) s.terms_.emplace(std::move(v), std::move(c));
  return s;
}

void State::add_term(const BasisVector& v, const Surd& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(v, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

State& State::operator+=(const State& o) {
  for (const auto& [v, c] : o.terms_) add_term(v, c);
  return *this;
}

State& State::operator-=(const State& o) {
  for (const auto& [v, c] : o.terms_) add_term(v, -c);
  return *this;
}

State& State::operator*=(const Surd& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [v, coeff] : terms_) coeff *= c;
  return *this;
}

Surd State::coeff(const BasisVector& v) const {
  auto it = terms_.find(v);
  return it == terms_.end() ? Surd(0) : it->second;
}

std::optional<std::pair<BasisVector, Surd>> State::as_monomial() const {
  if (terms_.size() != 1) return std::nullopt;
  return *terms_.begin();
}

std::string State::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [v, c] : terms_) {
    if (!first) s += " + ";
    s += "(" + c.str() + ")*" + v.str();
    first = false;
  }
  return s;
}

State apply_clifford(int twice_m, const BasisVector& v) {
  if (twice_m % 2 == 0) throw DomainError("clifford index must be half-integral");
  const auto& occ = v.occupations();
  std::vector<int> out;
  out.reserve(occ.size() + 1);
  if (twice_m < 0) {
    int target = (-twice_m - 1) / 2;
    if (v.contains(target)) return State::zero();  // Pauli exclusion
    int greater = 0;
    for (int n : occ)
      if (n > target) ++greater;
    out = occ;
    out.insert(std::upper_bound(out.begin(), out.end(), target), target);
    return State::monomial(BasisVector(std::move(out)),
                           Surd((greater % 2) ? -1 : 1));
  }
  int target = (twice_m - 1) / 2;
  if (!v.contains(target)) return State::zero();
  int greater = 0;
  for (int n : occ) {
    if (n != target) out.push_back(n);
    if (n > target) ++greater;
  }
  return State::monomial(BasisVector(std::move(out)),
                         Surd((greater % 2) ? -1 : 1));
}

State apply_clifford(int twice_m, const State& s) {
  State r;
  for (const auto& [v, c] : s.terms()) {
    State img = apply_clifford(twice_m, v);
    img *= c;
    r += img;
  }
  return r;
}

namespace {

void enumerate_rec(long budget_quarters, int next, std::vector<int>& cur,
                   const BasisFilter& f, std::vector<BasisVector>& out) {
  // occupations chosen in decreasing order; `next` is the largest candidate
  {
    BasisVector v(std::vector<int>(cur.rbegin(), cur.rend()));
    bool ok = true;
    if (f.dg && v.dg() != *f.dg) ok = false;
    if (f.parity && v.parity() != *f.parity) ok = false;
    if (ok) out.push_back(std::move(v));
  }
  if (budget_quarters < 2) return;
  int fit = static_cast<int>((budget_quarters - 2) / 4);
  for (int n = std::min(next, fit); n >= 0; --n) {
    cur.push_back(n);
    enumerate_rec(budget_quarters - (4L * n + 2), n - 1, cur, f, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<BasisVector> enumerate_basis(long max_energy_quarters,
                                         const BasisFilter& filter) {
  std::vector<BasisVector> out;
  if (max_energy_quarters < 0) return out;
  std::vector<int> cur;
  int max_occ = static_cast<int>((max_energy_quarters - 2) / 4);
  enumerate_rec(max_energy_quarters, max_occ, cur, filter, out);
  std::sort(out.begin(), out.end());
  return out;
}

BasisVector basis_from_json_array(const std::vector<int>& occ) {
  std::vector<int> sorted = occ;
  std::sort(sorted.begin(), sorted.end());
  return BasisVector(std::move(sorted));
}

}  // namespace virfock

#ifndef VIRFOCK_OPERATORS_HPP
#define VIRFOCK_OPERATORS_HPP

#include <string>
#include <vector>

#include "virfock/fock.hpp"

namespace virfock {

// Mode operators acting on F: the Clifford modes phi_m, the Heisenberg
// modes h_k, and the Virasoro families Lhalf_n, Lone_n, L^{lambda,b}_n.
struct OperatorSpec {
  enum class Kind { Clifford, Heisenberg, VirHalf, VirOne, VirLambda };

  Kind kind;
  int index;  // for Clifford this is 2m (odd); otherwise the integer index
  Surd lambda;
  Surd b;

  static OperatorSpec clifford(int twice_m) {
    return {Kind::Clifford, twice_m, Surd(0), Surd(0)};
  }
  static OperatorSpec heisenberg(int k) {
    return {Kind::Heisenberg, k, Surd(0), Surd(0)};
  }
  static OperatorSpec vir_half(int n) {
    return {Kind::VirHalf, n, Surd(0), Surd(0)};
  }
  static OperatorSpec vir_one(int n) {
    return {Kind::VirOne, n, Surd(0), Surd(0)};
  }
  static OperatorSpec vir_lambda(int n, Surd lambda, Surd b) {
    return {Kind::VirLambda, n, std::move(lambda), std::move(b)};
  }

  int fermion_parity() const { return kind == Kind::Clifford ? 1 : 0; }

  // "h[k]", "Lhalf[n]", "Lone[n]", "L[n;lambda=...;b=...]", "phi[2m/2]"
  std::string str() const;
  static OperatorSpec parse(const std::string& s);
};

State apply_h(int k, const State& s);
State apply_vir_half(int n, const State& s);
State apply_vir_one(int n, const State& s);
State apply_vir_lambda(int n, const Surd& lambda, const Surd& b, const State& s);

State apply_op(const OperatorSpec& op, const State& s);
State apply_op(const OperatorSpec& op, const BasisVector& v);

// a b s - (-1)^{p(a)p(b)} b a s (graded only when both are Clifford modes)
State commutator_apply(const OperatorSpec& a, const OperatorSpec& b,
                       const State& s);

// central charge -12 lambda^2 + 12 lambda - 2
Surd central_charge(const Surd& lambda);

struct IdentityDefect {
  BasisVector witness;
  int index;     // mode index n for the shifted-b identity, 0 otherwise
  State defect;  // lhs - rhs on the witness
};

enum class ModeIdentity { HalfEqualsSugawara, ShiftedBQuarter };

// Applies both sides of the identity to every listed vector; empty result
// means zero defect everywhere. For ShiftedBQuarter runs |n| <= n_range.
std::vector<IdentityDefect> mode_identity_check(
    ModeIdentity identity, const std::vector<BasisVector>& basis,
    int n_range = 3);

}  // namespace virfock

#endif

#include "virfock/operators.hpp"

#include <algorithm>

namespace virfock {

namespace {

int max_occupation(const BasisVector& v) {
  const auto& occ = v.occupations();
  return occ.empty() ? -1 : occ.back();
}

// h_k = sum_{m < k} (-1)^{1/2 - m} :phi_m phi_{2k-m}: ,  m in Z+1/2,
// derived from h(z) = 1/2 :phi(z)phi(-z): with (-z)^{-n-1/2} = (-1)^{n+1/2} z^{-n-1/2}.
// Each unordered pair {m, 2k-m} contributes twice with equal weight, which
// cancels the overall 1/2.
State apply_h_term(int k, const BasisVector& v) {
  State res;
  int N = max_occupation(v);
  State sv = State::monomial(v);
  // twice-indices: tm odd, tm < 2k, tm >= 4k - (2N+1)
  for (int tm = 4 * k - (2 * N + 1); tm <= 2 * k - 1; tm += 2) {
    if (tm % 2 == 0) throw DomainError("internal: even clifford index");
    int tn = 4 * k - tm;
    int exp = (1 - tm) / 2;  // integer exponent of (-1): 1/2 - m
    Surd sign(((exp % 2) + 2) % 2 ? -1 : 1);
    State img;
    if (tm < 0)
      img = apply_clifford(tm, apply_clifford(tn, sv));
    else
      img = apply_clifford(tn, apply_clifford(tm, sv)), sign = -sign;
    img *= sign;
    res += img;
  }
  return res;
}

}  // namespace

State apply_h(int k, const State& s) {
  State r;
  for (const auto& [v, c] : s.terms()) {
    State img = apply_h_term(k, v);
    img *= c;
    r += img;
  }
  return r;
}

// Lhalf_n = 1/2 sum_{m+m'=n} (-m-1/2) :phi_m phi_{m'}:
State apply_vir_half(int n, const State& s) {
  State r;
  for (const auto& [v, c] : s.terms()) {
    int N = max_occupation(v);
    State sv = State::monomial(v, c);
    for (int tm = 2 * n - (2 * N + 1); tm <= 2 * N + 1; tm += 2) {
      int tmp = 2 * n - tm;
      Rat coef(-(tm + 1), 4);  // 1/2 * (-m - 1/2)
      coef.canonicalize();
      if (coef == 0) continue;
      State img;
      if (tm < 0)
        img = apply_clifford(tm, apply_clifford(tmp, sv));
      else {
        img = apply_clifford(tmp, apply_clifford(tm, sv));
        coef = -coef;
      }
      img *= Surd(coef);
      r += img;
    }
  }
  return r;
}

// Lone_n = 1/2 sum_{i+j=n} :h_i h_j: with Heisenberg-mode normal ordering
State apply_vir_one(int n, const State& s) {
  State r;
  for (const auto& [v, c] : s.terms()) {
    long d = v.degh();
    State sv = State::monomial(v, c * Surd(Rat(1, 2)));
    for (long i = n - d; i <= d; ++i) {
      long j = n - i;
      State img;
      if (i < 0)
        img = apply_h(i, apply_h(j, sv));
      else
        img = apply_h(j, apply_h(i, sv));
      r += img;
    }
  }
  return r;
}

State apply_vir_lambda(int n, const Surd& lambda, const Surd& b,
                       const State& s) {
  Surd mu = (Surd(1) - Surd(2) * lambda) * Surd(Rat(1, 4));
  State r = apply_vir_one(n, s);
  // -( (1-2 lambda)/4 * (2n+1) + b ) h_n
  Surd lin = -(mu * Surd(2 * n + 1) + b);
  if (!lin.is_zero()) {
    State hs = apply_h(n, s);
    hs *= lin;
    r += hs;
  }
  if (n == 0) {
    Surd bm = b + mu;
    Surd cst = (bm * bm - Surd(4) * mu * mu) * Surd(Rat(1, 2));
    if (!cst.is_zero()) {
      State cs = s;
      cs *= cst;
      r += cs;
    }
  }
  return r;
}

State apply_op(const OperatorSpec& op, const State& s) {
  switch (op.kind) {
    case OperatorSpec::Kind::Clifford:
      return apply_clifford(op.index, s);
    case OperatorSpec::Kind::Heisenberg:
      return apply_h(op.index, s);
    case OperatorSpec::Kind::VirHalf:
      return apply_vir_half(op.index, s);
    case OperatorSpec::Kind::VirOne:
      return apply_vir_one(op.index, s);
    case OperatorSpec::Kind::VirLambda:
      return apply_vir_lambda(op.index, op.lambda, op.b, s);
  }
  throw DomainError("unknown operator kind");
}

State apply_op(const OperatorSpec& op, const BasisVector& v) {
  return apply_op(op, State::monomial(v));
}

State commutator_apply(const OperatorSpec& a, const OperatorSpec& b,
                       const State& s) {
  State ab = apply_op(a, apply_op(b, s));
  State ba = apply_op(b, apply_op(a, s));
  if (a.fermion_parity() && b.fermion_parity()) return ab + ba;
  return ab - ba;
}

Surd central_charge(const Surd& lambda) {
  return Surd(-12) * lambda * lambda + Surd(12) * lambda - Surd(2);
}

std::string OperatorSpec::str() const {
  switch (kind) {
    case Kind::Clifford:
      return "phi[" + std::to_string(index) + "/2]";
    case Kind::Heisenberg:
      return "h[" + std::to_string(index) + "]";
    case Kind::VirHalf:
      return "Lhalf[" + std::to_string(index) + "]";
    case Kind::VirOne:
      return "Lone[" + std::to_string(index) + "]";
    case Kind::VirLambda:
      return "L[" + std::to_string(index) + ";lambda=" + lambda.str() +
             ";b=" + b.str() + "]";
  }
  return "?";
}

OperatorSpec OperatorSpec::parse(const std::string& s) {
  auto lb = s.find('[');
  if (lb == std::string::npos || s.back() != ']')
    throw ParseError("bad operator: " + s);
  std::string head = s.substr(0, lb);
  std::string body = s.substr(lb + 1, s.size() - lb - 2);
  if (head == "phi") {
    auto slash = body.find("/2");
    if (slash == std::string::npos) throw ParseError("bad clifford index: " + s);
    return clifford(std::stoi(body.substr(0, slash)));
  }
  if (head == "h") return heisenberg(std::stoi(body));
  if (head == "Lhalf") return vir_half(std::stoi(body));
  if (head == "Lone") return vir_one(std::stoi(body));
  if (head == "L") {
    auto p1 = body.find(";lambda=");
    auto p2 = body.find(";b=");
    if (p1 == std::string::npos || p2 == std::string::npos || p2 < p1)
      throw ParseError("bad operator: " + s);
    int n = std::stoi(body.substr(0, p1));
    Surd lam = Surd::parse(body.substr(p1 + 8, p2 - p1 - 8));
    Surd bb = Surd::parse(body.substr(p2 + 3));
    return vir_lambda(n, std::move(lam), std::move(bb));
  }
  throw ParseError("unknown operator: " + s);
}

std::vector<IdentityDefect> mode_identity_check(
    ModeIdentity identity, const std::vector<BasisVector>& basis,
    int n_range) {
  std::vector<IdentityDefect> defects;
  const Surd half(Rat(1, 2));
  const Surd quarter(Rat(-1, 4));
  for (const auto& v : basis) {
    State sv = State::monomial(v);
    if (identity == ModeIdentity::HalfEqualsSugawara) {
      // Lhalf_0 = 2 Lone_0 + 1/2 h_0
      State lhs = apply_vir_half(0, sv);
      State rhs = apply_vir_one(0, sv);
      rhs *= Surd(2);
      State h0 = apply_h(0, sv);
      h0 *= half;
      rhs += h0;
      lhs -= rhs;
      if (!lhs.is_zero()) defects.push_back({v, 0, std::move(lhs)});
    } else {
      // L^{1/2,-1/4}_n = 1/2 Lhalf_{2n} + 1/32 delta_{n,0}
      for (int n = -n_range; n <= n_range; ++n) {
        State lhs = apply_vir_lambda(n, half, quarter, sv);
        State rhs = apply_vir_half(2 * n, sv);
        rhs *= half;
        if (n == 0) {
          State cs = sv;
          cs *= Surd(Rat(1, 32));
          rhs += cs;
        }
        lhs -= rhs;
        if (!lhs.is_zero()) defects.push_back({v, n, std::move(lhs)});
      }
    }
  }
  return defects;
}

}  // namespace virfock

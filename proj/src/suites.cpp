#include "virfock/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace virfock {

namespace {

using OrderedJson = nlohmann::ordered_json;

// Memoized linear operator indexed by an integer mode number.
class CachedOp {
 public:
  using Fn = std::function<State(int, const State&)>;
  explicit CachedOp(Fn fn) : fn_(std::move(fn)) {}

  const State& column(int idx, const BasisVector& v) {
    auto key = std::make_pair(idx, v);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    State img = fn_(idx, State::monomial(v));
    return memo_.emplace(std::move(key), std::move(img)).first->second;
  }

  State apply(int idx, const State& s) {
    State r;
    for (const auto& [v, c] : s.terms()) {
      State img = column(idx, v);
      img *= c;
      r += img;
    }
    return r;
  }

 private:
  Fn fn_;
  std::map<std::pair<int, BasisVector>, State> memo_;
};

struct Checker {
  Report& report;
  void add(const std::string& name, const std::string& anchor, bool passed,
           std::string detail = "") {
    report.checks.push_back({name, anchor, passed, std::move(detail)});
  }
};

Surd parse_or(const std::optional<std::string>& text, const Surd& fallback) {
  return text ? Surd::parse(*text) : fallback;
}

std::string state_brief(const State& s) {
  std::string t = s.str();
  if (t.size() > 160) t = t.substr(0, 157) + "...";
  return t;
}

// [A_m, A_n] v = (m-n) A_{m+n} v + delta_{m,-n} (m^3-m)/12 c v, exact,
// swept over m <= n (the m > n half is the literal negation of both sides).
CheckResult virasoro_bracket_check(const std::string& name, CachedOp& op,
                                   const Surd& c,
                                   const std::vector<BasisVector>& basis,
                                   int mode_window) {
  for (int m = -mode_window; m <= mode_window; ++m) {
    for (int n = m; n <= mode_window; ++n) {
      for (const auto& v : basis) {
        State sv = State::monomial(v);
        State lhs = op.apply(m, op.column(n, v)) - op.apply(n, op.column(m, v));
        State rhs = op.column(m + n, v);
        rhs *= Surd(m - n);
        if (m == -n) {
          Rat central(static_cast<long>(m) * m * m - m, 12);
          central.canonicalize();
          State cs = sv;
          cs *= Surd(central) * c;
          rhs += cs;
        }
        lhs -= rhs;
        if (!lhs.is_zero())
          return {name, "virasoro bracket [L_m,L_n]=(m-n)L_{m+n}+delta c(m^3-m)/12",
                  false,
                  "defect at (m,n)=(" + std::to_string(m) + "," +
                      std::to_string(n) + ") on " + v.str() + ": " +
                      state_brief(lhs)};
      }
    }
  }
  return {name, "virasoro bracket [L_m,L_n]=(m-n)L_{m+n}+delta c(m^3-m)/12",
          true, ""};
}

void suite_clifford(const RunConfig& cfg, Checker& ck) {
  auto basis = enumerate_basis(cfg.energy_cutoff);
  int tw = 2 * cfg.mode_window + 3;  // odd twice-index window
  bool ok = true;
  std::string detail;
  for (int ta = -tw; ta <= tw && ok; ta += 2) {
    for (int tb = -tw; tb <= tw && ok; tb += 2) {
      for (const auto& v : basis) {
        State sv = State::monomial(v);
        State anti = apply_clifford(ta, apply_clifford(tb, sv)) +
                     apply_clifford(tb, apply_clifford(ta, sv));
        if (ta == -tb) anti -= sv;
        if (!anti.is_zero()) {
          ok = false;
          detail = "defect at (2a,2b)=(" + std::to_string(ta) + "," +
                   std::to_string(tb) + ") on " + v.str();
          break;
        }
      }
    }
  }
  ck.add("clifford-anticommutation", "{phi_a,phi_b}=delta_{a,-b} id", ok, detail);

  State vac = State::monomial(BasisVector());
  ck.add("vacuum-annihilation", "phi_n|0>=0 for n>0",
         apply_clifford(1, vac).is_zero());
  ck.add("pauli-exclusion", "phi_{-1/2}^2|0>=0",
         apply_clifford(-1, apply_clifford(-1, vac)).is_zero());

  bool grading_ok = true;
  for (const auto& v : basis) {
    auto g = gradings(v);
    if (g.parity != g.length % 2 || g.parity != ((g.dg % 2) + 2) % 2 ||
        g.degh < 0) {
      grading_ok = false;
      break;
    }
  }
  ck.add("grading-compatibility", "parity = length mod 2 = dg mod 2, degh >= 0",
         grading_ok);

  bool vac_ok = true;
  for (int n = -4; n <= 4; ++n) {
    BasisVector vn = vacuum_like(n);
    if (vn.dg() != n || vn.degh() != 0) vac_ok = false;
    if (sector_min_energy_quarters(n) > cfg.energy_cutoff) continue;
    int minimal = 0;
    for (const auto& v : basis)
      if (v.dg() == n && v.energy_quarters() == sector_min_energy_quarters(n))
        ++minimal;
    if (minimal != 1) vac_ok = false;
  }
  ck.add("vacuum-like-minimality",
         "v_n is the unique minimal vector of its charge sector", vac_ok);
}

void suite_heisenberg(const RunConfig& cfg, Checker& ck) {
  auto basis = enumerate_basis(cfg.energy_cutoff);
  CachedOp h([](int k, const State& s) { return apply_h(k, s); });
  bool ok = true;
  std::string detail;
  int w = cfg.mode_window;
  for (int m = -w; m <= w && ok; ++m) {
    for (int n = m; n <= w && ok; ++n) {
      for (const auto& v : basis) {
        State lhs = h.apply(m, h.column(n, v)) - h.apply(n, h.column(m, v));
        if (m == -n && m != 0) {
          State sv = State::monomial(v);
          sv *= Surd(m);
          lhs -= sv;
        }
        if (!lhs.is_zero()) {
          ok = false;
          detail = "defect at (m,n)=(" + std::to_string(m) + "," +
                   std::to_string(n) + ") on " + v.str();
          break;
        }
      }
    }
  }
  ck.add("heisenberg-bracket", "[h_m,h_n]=m delta_{m+n,0} id", ok, detail);

  bool h0_ok = true;
  for (const auto& v : basis) {
    State expect = State::monomial(v, Surd(v.dg()));
    if (!(apply_h(0, State::monomial(v)) == expect)) {
      h0_ok = false;
      break;
    }
  }
  ck.add("charge-eigenvalue", "h_0 v = dg(v) v", h0_ok);

  bool ladder_ok = true;
  for (int k = 1; k <= w && ladder_ok; ++k) {
    for (const auto& v : basis) {
      for (int sgn : {-1, 1}) {
        State img = apply_h(sgn * -k, State::monomial(v));
        for (const auto& [u, c] : img.terms()) {
          if (u.dg() != v.dg() || u.degh() != v.degh() + sgn * k) {
            ladder_ok = false;
            break;
          }
        }
      }
      if (!ladder_ok) break;
    }
  }
  ck.add("degh-ladder", "h_{-k} raises degh by k, h_k lowers it", ladder_ok);
}

struct VirFamily {
  std::string name;
  CachedOp::Fn fn;
  Surd c;
  bool is_lambda;
  Surd lambda, b;
};

std::vector<VirFamily> virasoro_families(const RunConfig& cfg) {
  std::vector<VirFamily> fams;
  auto lam_family = [](const Surd& lam, const Surd& b) {
    VirFamily f;
    f.name = "L[lambda=" + lam.str() + ";b=" + b.str() + "]";
    f.fn = [lam, b](int n, const State& s) {
      return apply_vir_lambda(n, lam, b, s);
    };
    f.c = central_charge(lam);
    f.is_lambda = true;
    f.lambda = lam;
    f.b = b;
    return f;
  };
  if (cfg.lambda_text) {
    fams.push_back(lam_family(Surd::parse(*cfg.lambda_text),
                              parse_or(cfg.b_text, Surd(0))));
    return fams;
  }
  fams.push_back({"Lhalf",
                  [](int n, const State& s) { return apply_vir_half(n, s); },
                  Surd(Rat(1, 2)), false, Surd(0), Surd(0)});
  fams.push_back({"Lone",
                  [](int n, const State& s) { return apply_vir_one(n, s); },
                  Surd(1), false, Surd(0), Surd(0)});
  const Surd half(Rat(1, 2));
  fams.push_back(lam_family(half, Surd(0)));
  fams.push_back(lam_family(half, Surd(Rat(0), Rat(1, 2), 2)));  // 1/sqrt(2)
  fams.push_back(lam_family(Surd(Rat(1, 3)), Surd(0)));
  fams.push_back(lam_family(Surd(Rat(1, 3)), Surd(Rat(1, 5))));
  auto ds = discrete_series_solve(1, 2, 2, 0, 1, 1, -1);
  fams.push_back(lam_family(ds.lambda, ds.b));
  return fams;
}

void suite_virasoro(const RunConfig& cfg, Checker& ck) {
  auto basis = enumerate_basis(cfg.energy_cutoff);
  for (auto& fam : virasoro_families(cfg)) {
    CachedOp op(fam.fn);
    auto res = virasoro_bracket_check(fam.name + " bracket (c=" + fam.c.str() + ")",
                                      op, fam.c, basis, cfg.mode_window);
    ck.report.checks.push_back(res);
    if (!fam.is_lambda) continue;
    // highest weight data
    bool hw_ok = true;
    std::string detail;
    for (int n = -4; n <= 4 && hw_ok; ++n) {
      State vn = State::monomial(vacuum_like(n));
      for (int j = 1; j <= cfg.j_max; ++j) {
        if (!op.apply(j, vn).is_zero()) {
          hw_ok = false;
          detail = "L_" + std::to_string(j) + " v_" + std::to_string(n) +
                   " != 0";
          break;
        }
      }
      State l0 = op.apply(0, vn);
      State expect = vn;
      expect *= hw_weight(fam.lambda, fam.b, n);
      if (!(l0 == expect)) {
        hw_ok = false;
        detail = "L_0 v_" + std::to_string(n) + " off the weight formula";
      }
    }
    ck.add(fam.name + " highest-weight",
           "L_j v_n = 0 (j>0), L_0 v_n = ((b+(1-2l)/4-n)^2/2-2((1-2l)/4)^2) v_n",
           hw_ok, detail);
  }
}

void suite_identities(const RunConfig& cfg, Checker& ck) {
  auto basis = enumerate_basis(cfg.energy_cutoff);
  auto d1 = mode_identity_check(ModeIdentity::HalfEqualsSugawara, basis);
  ck.add("half-equals-sugawara", "Lhalf_0 = 2 Lone_0 + 1/2 h_0", d1.empty(),
         d1.empty() ? "" : "defect on " + d1.front().witness.str());
  auto d2 = mode_identity_check(ModeIdentity::ShiftedBQuarter, basis, 3);
  ck.add("shifted-b-quarter", "L[1/2,-1/4]_n = 1/2 Lhalf_{2n} + 1/32 delta_{n,0}",
         d2.empty(),
         d2.empty() ? "" : "defect at n=" + std::to_string(d2.front().index) +
                               " on " + d2.front().witness.str());
  // [Lhalf_0, h_k] = -2k h_k
  bool comm_ok = true;
  for (int k = -cfg.mode_window; k <= cfg.mode_window && comm_ok; ++k) {
    for (const auto& v : basis) {
      State sv = State::monomial(v);
      State lhs = commutator_apply(OperatorSpec::vir_half(0),
                                   OperatorSpec::heisenberg(k), sv);
      State rhs = apply_h(k, sv);
      rhs *= Surd(-2 * k);
      if (!(lhs == rhs)) {
        comm_ok = false;
        break;
      }
    }
  }
  ck.add("energy-heisenberg-commutator", "[Lhalf_0, h_k] = -2k h_k", comm_ok);
}

void suite_char(const RunConfig& cfg, Checker& ck) {
  SeriesOrders orders{cfg.q_order, cfg.z_window};
  SectorSpec full;
  full.selector = SectorSpec::Selector::Full;
  full.weight = OperatorSpec::vir_half(0);
  full.include_charge_variable = true;
  CharSeries traced = trace_character(full, cfg.q_order, cfg.z_window);
  CharSeries jac1 = product_form(ProductForm::Jac1TwoVariable, orders);
  CharSeries jac2 = sum_form(SumForm::Jac2TwoVariable, orders);

  auto cmp = [&](const std::string& name, const std::string& anchor,
                 const CharSeries& a, const CharSeries& bseries) {
    auto disc = a.first_discrepancy(bseries);
    std::string detail;
    if (disc)
      detail = "first discrepancy at q4=" + std::to_string(disc->first) +
               ", z=" + std::to_string(disc->second);
    ck.add(name, anchor, !disc.has_value(), detail);
  };
  cmp("trace-vs-product", "tr q^{Lhalf_0} z^{h_0} = prod(1+zq^{2i-1/2})(1+z^{-1}q^{2i-3/2})",
      traced, jac1);
  cmp("trace-vs-sum", "tr q^{Lhalf_0} z^{h_0} = sum_n z^n q^{n/2+n^2}/prod(1-q^{2i})",
      traced, jac2);

  for (int p : {0, 1}) {
    SectorSpec par;
    par.selector = SectorSpec::Selector::Parity;
    par.parameter = p;
    par.weight = OperatorSpec::vir_half(0);
    CharSeries tp = trace_character(par, cfg.q_order, 0);
    CharSeries pred = sum_form(p ? SumForm::CharHalfOdd : SumForm::CharHalfEven,
                               {cfg.q_order, 0});
    cmp(p ? "parity-odd-character" : "parity-even-character",
        "tr_{parity} q^{Lhalf_0} = sum_{n even/odd} q^{n^2+n/2}/prod(1-q^{2i})",
        tp, pred);
  }

  CharSeries s0 = known_character_ising0(cfg.q_order);
  CharSeries sh = known_character_ising_half(cfg.q_order);
  cmp("character-sum-product", "ch M(1/2,0)+ch M(1/2,1/2) = prod(1+q^{1/2+i})",
      s0 + sh, product_form(ProductForm::NegQHalf, {cfg.q_order, 0}));
  cmp("specialize-z1", "two-variable character at z=1",
      traced.specialize_z1(),
      product_form(ProductForm::NegQHalf, {cfg.q_order, 0}));
  ck.add("fermionic-positivity", "character sums have non-negative coefficients",
         s0.all_coeffs_nonnegative() && sh.all_coeffs_nonnegative() &&
             traced.all_coeffs_nonnegative());
}

void suite_jacobi(const RunConfig& cfg, Checker& ck) {
  auto res = jacobi_check(cfg.q_order, cfg.z_window);
  std::string detail;
  if (!res.ok)
    detail = "first discrepancy at q4=" +
             std::to_string(res.first_discrepancy->first) +
             ", z=" + std::to_string(res.first_discrepancy->second);
  ck.add("jacobi-triple-product",
         "prod(1-q^{2i})(1+zq^{2i-1/2})(1+z^{-1}q^{2i-3/2}) = sum_m z^m q^{m(2m+1)/2}",
         res.ok, detail);
}

// b - charge = m/sqrt(2) for integer m? returns m
std::optional<long> sqrt2_multiple(const Surd& b, int charge) {
  Surd diff = b - Surd(charge);
  if (diff.is_zero()) return 0;
  if (diff.is_rational()) return std::nullopt;
  if (diff.radicand() != 2 || diff.rat_part() != 0) return std::nullopt;
  Rat m2 = diff.surd_part() * 2;
  if (m2.get_den() != 1) return std::nullopt;
  return m2.get_num().get_si();
}

void suite_singular(const RunConfig& cfg, Checker& ck) {
  Surd lambda = parse_or(cfg.lambda_text, Surd(Rat(1, 2)));
  Surd b = parse_or(cfg.b_text, Surd(0));
  int charge = cfg.sector.value_or(0);
  auto m_opt = sqrt2_multiple(b, charge);

  std::set<long> expected_levels;
  if (lambda == Surd(Rat(1, 2)) && m_opt) {
    long m = *m_opt;
    for (long k = std::max(1L, -m + 1);; ++k) {
      long lvl = k * (k + m);
      if (lvl > cfg.max_level) break;
      if (lvl >= 1) expected_levels.insert(lvl);
    }
  }

  std::map<int, std::vector<State>> kernels;
  bool pattern_ok = true;
  std::string pattern_detail;
  for (int lvl = 1; lvl <= cfg.max_level; ++lvl) {
    kernels[lvl] = singular_vector_search(lambda, b, charge, lvl, cfg.j_max);
    size_t expect_dim = expected_levels.count(lvl) ? 1 : 0;
    if (kernels[lvl].size() != expect_dim && pattern_ok) {
      pattern_ok = false;
      pattern_detail = "kernel at level " + std::to_string(lvl) +
                       " has dimension " + std::to_string(kernels[lvl].size()) +
                       ", expected " + std::to_string(expect_dim);
    }
  }
  ck.add("singular-level-pattern",
         "dim ker(L_1..L_jmax) is 1 at levels k(k+m) when b-n = m/sqrt(2), "
         "0 elsewhere",
         pattern_ok, pattern_detail);

  if (lambda == Surd(Rat(1, 2))) {
    // second route: L^{1/2,b}_j = 1/2 Lhalf_{2j} - (1/4 + b) h_j on levels,
    // built from the fermion-bilinear and Heisenberg operators directly
    bool cross_ok = true;
    std::string cross_detail;
    for (auto& [lvl, vecs] : kernels) {
      for (const auto& s : vecs) {
        for (int j = 1; j <= cfg.j_max && cross_ok; ++j) {
          State img = apply_vir_half(2 * j, s);
          img *= Surd(Rat(1, 2));
          State hs = apply_h(j, s);
          hs *= Surd(Rat(1, 4)) + b;
          img -= hs;
          if (!img.is_zero()) {
            cross_ok = false;
            cross_detail = "independent operator route disagrees at level " +
                           std::to_string(lvl) + ", j=" + std::to_string(j);
          }
        }
      }
    }
    ck.add("kernel-cross-check",
           "kernel vectors also annihilated by 1/2 Lhalf_{2j} - (1/4+b) h_j",
           cross_ok, cross_detail);
  }

  if (charge == 0 && m_opt && lambda == Surd(Rat(1, 2))) {
    long m = *m_opt;
    bool mono_ok = true;
    std::string mono_detail;
    for (int lvl : expected_levels) {
      if (kernels[lvl].size() != 1) continue;
      long k = -1;
      for (long kk = 1; kk <= lvl + std::labs(m); ++kk)
        if (kk * (kk + m) == lvl) k = kk;
      BasisVector mono = explicit_singular(static_cast<int>(m),
                                           static_cast<int>(k));
      auto single = kernels[lvl][0].as_monomial();
      bool match = single && single->first == mono;
      if (!match && mono_ok) {
        mono_ok = false;
        mono_detail =
            "level " + std::to_string(lvl) + ": exact kernel vector is " +
            state_brief(kernels[lvl][0]) + "; the staircase monomial " +
            mono.str() + " is its leading term but is not itself singular";
      }
    }
    ck.add("staircase-monomial-match",
           "kernel vector proportional to the staircase monomial family",
           mono_ok, mono_detail);
  }
}

void suite_decompose(const RunConfig& cfg, Checker& ck) {
  Surd b = parse_or(cfg.b_text, Surd(0));
  DecompCase kase = classify_case(b);
  auto rep = decomposition_report(kase, b, cfg.q_order,
                                  std::min(cfg.z_window, 4));
  for (const auto& s : rep.sectors) {
    ck.add("sector-" + std::to_string(s.charge) + "-character (hw=" + s.hw_text + ")",
           "ch F_(n) matches the predicted c=1 module character",
           s.agree, s.agree ? "" : "agrees only to q4=" +
                                        std::to_string(s.agree_to_q4));
  }
  if (kase != DecompCase::I)
    ck.add("telescoping", "sum of degenerate c=1 characters telescopes to 1/prod(1-q^i)",
           rep.telescoping_ok);
  ck.add("reassembly-even", "even-parity trace reassembles from the charge sectors",
         rep.reassembly_even_ok);
  ck.add("reassembly-odd", "odd-parity trace reassembles from the charge sectors",
         rep.reassembly_odd_ok);
}

void suite_discrete(const RunConfig& cfg, Checker& ck) {
  bool ok = true;
  std::string detail;
  std::set<Rat> m1_weights;
  for (int m = 0; m <= cfg.discrete_max_m && ok; ++m) {
    Rat c_target = discrete_series_c(m);
    for (int r = 1; r <= m + 1 && ok; ++r) {
      for (int s = 1; s <= r && ok; ++s) {
        Rat h_target = discrete_series_h(m, r, s);
        bool found = false;
        for (int s1 : {1, -1})
          for (int s2 : {1, -1})
            for (int s3 : {1, -1}) {
              auto sol = discrete_series_solve(m, r, s, 0, s1, s2, s3);
              if (sol.c == Surd(c_target) && sol.h == Surd(h_target))
                found = true;
            }
        if (!found) {
          ok = false;
          detail = "no sign combination at (m,r,s)=(" + std::to_string(m) +
                   "," + std::to_string(r) + "," + std::to_string(s) + ")";
        }
        if (m == 1) m1_weights.insert(h_target);
      }
    }
  }
  ck.add("discrete-series-parameters",
         "c = 1-6/((m+2)(m+3)) and h = h_{r,s} reachable by sign choices", ok,
         detail);
  std::set<Rat> expect{Rat(0), Rat(1, 2), Rat(1, 16)};
  ck.add("ising-weights", "m=1 weights are {0, 1/2, 1/16}",
         m1_weights == expect);
}

}  // namespace

std::string Report::to_json() const {
  OrderedJson j;
  j["command"] = command;
  OrderedJson c;
  c["energy_cutoff"] = config.energy_cutoff;
  c["q_order"] = config.q_order;
  c["z_window"] = config.z_window;
  c["mode_window"] = config.mode_window;
  if (config.lambda_text) c["lambda"] = *config.lambda_text;
  if (config.b_text) c["b"] = *config.b_text;
  if (config.sector) c["sector"] = *config.sector;
  c["max_level"] = config.max_level;
  c["j_max"] = config.j_max;
  j["config"] = c;
  j["checks"] = OrderedJson::array();
  for (const auto& chk : checks) {
    OrderedJson e;
    e["name"] = chk.name;
    e["anchor"] = chk.anchor;
    e["status"] = chk.passed ? "pass" : "fail";
    if (!chk.passed) e["first_discrepancy"] = chk.detail;
    j["checks"].push_back(e);
  }
  j["verdict"] = verdict() ? "pass" : "fail";
  return j.dump(2);
}

std::string Report::to_csv() const {
  std::string s = "command,name,anchor,status,detail\n";
  auto esc = [](std::string t) {
    std::string o = "\"";
    for (char ch : t) {
      if (ch == '"') o += "\"\"";
      else o += ch;
    }
    return o + "\"";
  };
  for (const auto& chk : checks)
    s += command + "," + esc(chk.name) + "," + esc(chk.anchor) + "," +
         (chk.passed ? "pass" : "fail") + "," + esc(chk.detail) + "\n";
  return s;
}

std::string Report::to_plain() const {
  std::ostringstream os;
  os << "== " << command << " ==\n";
  for (const auto& chk : checks) {
    os << (chk.passed ? "PASS" : "FAIL") << "  " << chk.name << "  [" << chk.anchor
       << "]";
    if (!chk.passed && !chk.detail.empty()) os << "\n      " << chk.detail;
    os << "\n";
  }
  os << "verdict: " << (verdict() ? "pass" : "fail") << "\n";
  return os.str();
}

std::string Report::render(const std::string& format) const {
  if (format == "json") return to_json();
  if (format == "csv") return to_csv();
  return to_plain();
}

Report run_suite(const RunConfig& config) {
  if (config.energy_cutoff < 0 || config.q_order < 0 || config.z_window < 0 ||
      config.mode_window < 0 || config.j_max < 1)
    throw DomainError("all numeric limits must be positive");
  Report report{config.command, config, {}};
  Checker ck{report};
  const std::string& cmd = config.command;
  if (cmd == "verify-clifford")
    suite_clifford(config, ck);
  else if (cmd == "verify-heisenberg")
    suite_heisenberg(config, ck);
  else if (cmd == "verify-virasoro")
    suite_virasoro(config, ck);
  else if (cmd == "verify-identities")
    suite_identities(config, ck);
  else if (cmd == "char")
    suite_char(config, ck);
  else if (cmd == "jacobi")
    suite_jacobi(config, ck);
  else if (cmd == "singular")
    suite_singular(config, ck);
  else if (cmd == "decompose")
    suite_decompose(config, ck);
  else if (cmd == "discrete")
    suite_discrete(config, ck);
  else
    throw DomainError("unknown command: " + cmd);
  return report;
}

}  // namespace virfock

#include "virfock/rep.hpp"

#include <algorithm>
#include <cmath>

namespace virfock {

namespace {

const Surd kHalf(Rat(1, 2));

Surd weight_mu(const Surd& lambda) {
  return (Surd(1) - Surd(2) * lambda) * Surd(Rat(1, 4));
}

// eigenvalue of the weight operator on vacuum_like(n), plain (non-quarter) units
Surd weight_hw(const OperatorSpec& w, int n) {
  switch (w.kind) {
    case OperatorSpec::Kind::VirHalf: {
      Rat e(sector_min_energy_quarters(n), 4);
      e.canonicalize();
      return Surd(e);
    }
    case OperatorSpec::Kind::VirOne:
      return hw_weight(kHalf, Surd(0), n);
    case OperatorSpec::Kind::VirLambda:
      return hw_weight(w.lambda, w.b, n);
    default:
      throw DomainError("unsupported weight operator: " + w.str());
  }
}

// eigenvalue step per degh level
int weight_level_step(const OperatorSpec& w) {
  return w.kind == OperatorSpec::Kind::VirHalf ? 2 : 1;
}

long rat_to_quarters(const Rat& r) {
  Rat q = r * 4;
  if (q.get_den() != 1)
    throw DomainError("eigenvalue off the quarter-integer lattice: " +
                      rat_to_string(r));
  return q.get_num().get_si();
}

void check_diagonal(const OperatorSpec& w, const BasisVector& v,
                    const Surd& eig) {
  State img = apply_op(w, v);
  State expect = State::monomial(v, eig);
  if (!(img == expect))
    throw DomainError("weight operator " + w.str() +
                      " not diagonal with expected eigenvalue on " + v.str());
}

bool sector_selected(const SectorSpec& sector, int n) {
  switch (sector.selector) {
    case SectorSpec::Selector::Full:
      return true;
    case SectorSpec::Selector::Parity:
      return ((n % 2) + 2) % 2 == sector.parameter;
    case SectorSpec::Selector::Charge:
      return n == sector.parameter;
  }
  return false;
}

void partitions_rec(int remaining, int min_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = min_part; p <= remaining; ++p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, 1, cur, out);
  return out;
}

// reduced row echelon form in place; returns pivot column per row
std::vector<int> rref(std::vector<std::vector<Surd>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t sel = row;
    while (sel < rows && m[sel][col].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[row]);
    Surd inv = Surd(1) / m[row][col];
    for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      Surd f = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  m.resize(row);  // drop zero rows
  return pivots;
}

}  // namespace

Surd hw_weight(const Surd& lambda, const Surd& b, int n) {
  Surd mu = weight_mu(lambda);
  Surd t = b + mu - Surd(n);
  return t * t * kHalf - Surd(2) * mu * mu;
}

CharSeries trace_character(const SectorSpec& sector, long q_order,
                           int z_window) {
  const OperatorSpec& w = sector.weight;
  if (w.index != 0) throw DomainError("weight operator must have index 0");
  int step = weight_level_step(w);
  CharSeries out(q_order, sector.include_charge_variable ? z_window : 0);
  long nmax = static_cast<long>(std::sqrt(static_cast<double>(q_order))) + 3;
  if (w.kind == OperatorSpec::Kind::VirLambda) {
    // weight parabola is centered near b + (1-2 lambda)/4
    Surd center = w.b + weight_mu(w.lambda);
    double c0 = center.rat_part().get_d() +
                center.surd_part().get_d() *
                    std::sqrt(static_cast<double>(center.radicand()));
    nmax += static_cast<long>(std::ceil(std::abs(c0))) + 1;
  }
  for (long n = -nmax; n <= nmax; ++n) {
    int ni = static_cast<int>(n);
    if (!sector_selected(sector, ni)) continue;
    if (sector.include_charge_variable && std::abs(ni) > z_window) continue;
    Surd hw = weight_hw(w, ni);
    if (!hw.is_rational())
      throw DomainError("irrational weight in sector " + std::to_string(n));
    long hw4 = rat_to_quarters(hw.rat_part());
    if (hw4 > q_order) continue;
    long lmax = (q_order - hw4) / (4 * step);
    auto cell = enumerate_basis(sector_min_energy_quarters(ni) + 8 * lmax,
                                BasisFilter{ni, std::nullopt});
    for (const auto& v : cell) {
      long l = v.degh();
      Surd eig = hw + Surd(Rat(step) * l);
      check_diagonal(w, v, eig);
      out.add(hw4 + 4 * step * l,
              sector.include_charge_variable ? ni : 0, Rat(1));
    }
  }
  return out;
}

CharSeries sector_trace_shifted(int charge, const Surd& lambda, const Surd& b,
                                long q_order) {
  OperatorSpec w = OperatorSpec::vir_lambda(0, lambda, b);
  Surd hw = hw_weight(lambda, b, charge);
  long lmax = q_order / 4;
  auto cell = enumerate_basis(sector_min_energy_quarters(charge) + 8 * lmax,
                              BasisFilter{charge, std::nullopt});
  CharSeries out(q_order, 0);
  for (const auto& v : cell) {
    long l = v.degh();
    check_diagonal(w, v, hw + Surd(Rat(l)));
    out.add(4 * l, 0, Rat(1));
  }
  return out;
}

std::vector<State> h_eigenbasis(int charge, int level) {
  State vac = State::monomial(vacuum_like(charge));
  std::vector<State> out;
  for (const auto& part : partitions_of(level)) {
    State s = vac;
    for (int k : part) s = apply_h(-k, s);
    out.push_back(std::move(s));
  }
  // cross-check: the p(level) states span the degh = level cell
  auto cell = enumerate_basis(sector_min_energy_quarters(charge) + 8L * level,
                              BasisFilter{charge, std::nullopt});
  std::vector<BasisVector> cell_basis;
  for (const auto& v : cell)
    if (v.degh() == level) cell_basis.push_back(v);
  if (cell_basis.size() != out.size())
    throw DomainError("h-eigenbasis: cell dimension mismatch");
  std::vector<std::vector<Surd>> m;
  for (const auto& s : out) {
    std::vector<Surd> row;
    row.reserve(cell_basis.size());
    for (const auto& v : cell_basis) row.push_back(s.coeff(v));
    for (const auto& [v, c] : s.terms())
      if (v.degh() != level)
        throw DomainError("h-eigenbasis: state leaves the level cell");
    m.push_back(std::move(row));
  }
  if (rref(m).size() != out.size())
    throw DomainError("h-eigenbasis: states not linearly independent");
  return out;
}

std::vector<State> singular_vector_search(const Surd& lambda, const Surd& b,
                                          int charge, int level, int j_max) {
  if (level < 1 || j_max < 1) throw DomainError("level and j_max must be >= 1");
  auto all = enumerate_basis(sector_min_energy_quarters(charge) + 8L * level,
                             BasisFilter{charge, std::nullopt});
  std::vector<BasisVector> cell;
  for (const auto& v : all)
    if (v.degh() == level) cell.push_back(v);
  if (cell.empty()) return {};

  // constraint rows: coefficients of L_j v over the union of image monomials
  std::vector<std::vector<Surd>> constraints;
  for (int j = 1; j <= j_max; ++j) {
    std::vector<State> images;
    std::map<BasisVector, size_t> rows;
    for (const auto& v : cell) {
      images.push_back(apply_vir_lambda(j, lambda, b, State::monomial(v)));
      for (const auto& [w, c] : images.back().terms())
        rows.try_emplace(w, 0);
    }
    size_t idx = 0;
    for (auto& [w, r] : rows) r = idx++;
    size_t base = constraints.size();
    constraints.resize(base + rows.size(),
                       std::vector<Surd>(cell.size(), Surd(0)));
    for (size_t cidx = 0; cidx < cell.size(); ++cidx)
      for (const auto& [w, c] : images[cidx].terms())
        constraints[base + rows[w]][cidx] = c;
  }

  std::vector<State> kernel;
  if (constraints.empty()) {
    for (const auto& v : cell) kernel.push_back(State::monomial(v));
    return kernel;
  }
  auto pivots = rref(constraints);
  std::vector<bool> is_pivot(cell.size(), false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;

  // nullspace vectors, then reduce them for a canonical echelon basis
  std::vector<std::vector<Surd>> null_rows;
  for (size_t f = 0; f < cell.size(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Surd> x(cell.size(), Surd(0));
    x[f] = Surd(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      x[static_cast<size_t>(pivots[r])] = -constraints[r][f];
    null_rows.push_back(std::move(x));
  }
  rref(null_rows);
  for (const auto& row : null_rows) {
    State s;
    for (size_t i = 0; i < cell.size(); ++i)
      if (!row[i].is_zero()) s.add_term(cell[i], row[i]);
    kernel.push_back(std::move(s));
  }
  return kernel;
}

BasisVector explicit_singular(int m, int k) {
  std::vector<int> occ;
  if (m >= 0) {
    if (k < 0) throw DomainError("explicit-singular: need k >= 0 for m >= 0");
    for (int t = 0; t <= k - 1; ++t) occ.push_back(2 * t);
    for (int j = m + 1; j <= k + m; ++j) occ.push_back(2 * j - 1);
  } else {
    if (k < -m) throw DomainError("explicit-singular: need k >= -m for m < 0");
    for (int t = -m; t <= k - 1; ++t) occ.push_back(2 * t);
    for (int j = 1; j <= k + m; ++j) occ.push_back(2 * j - 1);
  }
  std::sort(occ.begin(), occ.end());
  return BasisVector(std::move(occ));
}

DecompCase classify_case(const Surd& b) {
  Rat n1;
  bool lattice = false;
  if (b.is_rational()) {
    if (b.rat_part().get_den() == 1) {
      n1 = b.rat_part();
      lattice = true;  // m = 0
    }
  } else if (b.radicand() == 2) {
    Rat m2 = b.surd_part() * 2;  // b = n1 + (m/2) sqrt 2
    if (m2.get_den() == 1 && b.rat_part().get_den() == 1) {
      n1 = b.rat_part();
      lattice = true;
    }
  }
  if (!lattice) return DecompCase::I;
  return (n1.get_num() % 2 == 0) ? DecompCase::II : DecompCase::III;
}

bool DecompositionReport::ok() const {
  if (!telescoping_ok || !reassembly_even_ok || !reassembly_odd_ok) return false;
  for (const auto& s : sectors)
    if (!s.agree) return false;
  return true;
}

DecompositionReport decomposition_report(DecompCase kase, const Surd& b,
                                         long q_order, int sector_window) {
  if (classify_case(b) != kase)
    throw DomainError("decomposition case inconsistent with b = " + b.str());
  const Surd lambda = kHalf;
  DecompositionReport rep{kase, b, {}, true, true, true};

  // reducible sector index n1 and the sqrt(2)-multiple m (cases II/III)
  long n1 = 0, m = 0;
  if (kase != DecompCase::I) {
    n1 = b.rat_part().get_num().get_si();
    m = b.is_rational() ? 0 : Rat(b.surd_part() * 2).get_num().get_si();
  }

  // per-sector comparisons run in the shifted level variable; an agreement
  // to order Q/2 there covers order Q in the q^2 (reassembly) variable
  long shifted_order = q_order / 2;
  CharSeries partition_series = euler_inverse(4, shifted_order);

  for (int n = -sector_window; n <= sector_window; ++n) {
    SectorComparison cmp{n, hw_weight(lambda, b, n).str(),
                         sector_trace_shifted(n, lambda, b, shifted_order),
                         CharSeries(shifted_order, 0), false, 0};
    bool reducible = (kase != DecompCase::I) && n == n1;
    if (!reducible) {
      // irreducible sector: generic Verma character, shifted to levels
      cmp.predicted = partition_series;
    } else {
      // sum of degenerate characters, shifted by the sector highest weight
      CharSeries sum(shifted_order, 0);
      for (long k = std::max(0L, -m);; ++k) {
        long lo = k * (k + m);  // (m+2k)^2/4 - m^2/4
        if (4 * lo > shifted_order) break;
        long hi = (k + 1) * (k + 1 + m);
        CharSeries num(shifted_order, 0);
        num.add(4 * lo, 0, Rat(1));
        num.add(4 * hi, 0, Rat(-1));
        sum += num * partition_series;
      }
      cmp.predicted = sum;
      if (!(sum == partition_series)) rep.telescoping_ok = false;
    }
    auto disc = cmp.computed.first_discrepancy(cmp.predicted);
    cmp.agree = !disc.has_value();
    cmp.agree_to_q4 = cmp.agree ? shifted_order : disc->first - 1;
    rep.sectors.push_back(std::move(cmp));
  }

  // parity reassembly: tr q^{Lhalf_0} over a parity sector equals
  // sum_n q^{n^2+n/2} * (sector level series in q^2)
  CharSeries even(q_order, 0), odd(q_order, 0);
  long nmax = static_cast<long>(std::sqrt(static_cast<double>(q_order))) + 2;
  for (long n = -nmax; n <= nmax; ++n) {
    long off = 4 * n * n + 2 * n;
    if (off > q_order) continue;
    CharSeries piece = sector_trace_shifted(static_cast<int>(n), lambda, b,
                                            (q_order - off) / 2 + 2)
                           .scale_q(2)
                           .shift(off, 0);
    piece = CharSeries(q_order, 0) + piece;  // clamp to the report order
    if (((n % 2) + 2) % 2 == 0)
      even += piece;
    else
      odd += piece;
  }
  rep.reassembly_even_ok = even == sum_form(SumForm::CharHalfEven, {q_order, 0});
  rep.reassembly_odd_ok = odd == sum_form(SumForm::CharHalfOdd, {q_order, 0});
  return rep;
}

Rat discrete_series_c(int m) {
  Rat c = Rat(1) - Rat(6, (m + 2) * (m + 3));
  c.canonicalize();
  return c;
}

Rat discrete_series_h(int m, int r, int s) {
  long K = static_cast<long>(m + 3) * r - static_cast<long>(m + 2) * s;
  Rat h(K * K - 1, 4L * (m + 2) * (m + 3));
  h.canonicalize();
  return h;
}

DiscreteSeriesSolution discrete_series_solve(int m, int r, int s, int n,
                                             int sign1, int sign2, int sign3) {
  if (m < 0) throw DomainError("discrete series level m must be >= 0");
  if (!(1 <= s && s <= r && r <= m + 1))
    throw DomainError("labels out of range: need 1 <= s <= r <= m+1");
  if (std::abs(sign1) != 1 || std::abs(sign2) != 1 || std::abs(sign3) != 1)
    throw DomainError("signs must be +-1");
  long D = 2L * (m + 2) * (m + 3);
  // (2 lambda - 1) = sign1 * sqrt(2/((m+2)(m+3))) = sign1 * (2/D) sqrt(D)
  Surd lambda(Rat(1, 2), Rat(sign1, D), D);
  long K = static_cast<long>(m + 3) * r - static_cast<long>(m + 2) * s;
  // (b - n) = sign2 * (2K + sign3) / (2 sqrt(D)) = sign2 (2K+sign3)/(2D) sqrt(D)
  Rat bs(sign2 * (2 * K + sign3), 2 * D);
  bs.canonicalize();
  Surd b(Rat(n), bs, D);
  return {lambda, b, central_charge(lambda), hw_weight(lambda, b, n)};
}

}  // namespace virfock

#include "virfock/series.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace virfock {

Rat CharSeries::coeff(long q_quarters, int z_exp) const {
  auto it = c_.find({q_quarters, z_exp});
  return it == c_.end() ? Rat(0) : it->second;
}

void CharSeries::set(long q_quarters, int z_exp, Rat v) {
  if (q_quarters > q_order_ || std::abs(z_exp) > z_window_) return;
  if (v == 0)
    c_.erase({q_quarters, z_exp});
  else
    c_[{q_quarters, z_exp}] = std::move(v);
}

void CharSeries::add(long q_quarters, int z_exp, const Rat& v) {
  if (v == 0 || q_quarters > q_order_ || std::abs(z_exp) > z_window_) return;
  auto [it, inserted] = c_.try_emplace({q_quarters, z_exp}, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) c_.erase(it);
  }
}

CharSeries& CharSeries::operator+=(const CharSeries& o) {
  q_order_ = std::min(q_order_, o.q_order_);
  z_window_ = std::min(z_window_, o.z_window_);
  std::erase_if(c_, [&](const auto& kv) {
    return kv.first.first > q_order_ || std::abs(kv.first.second) > z_window_;
  });
  for (const auto& [k, v] : o.c_) add(k.first, k.second, v);
  return *this;
}

CharSeries& CharSeries::operator-=(const CharSeries& o) {
  q_order_ = std::min(q_order_, o.q_order_);
  z_window_ = std::min(z_window_, o.z_window_);
  std::erase_if(c_, [&](const auto& kv) {
    return kv.first.first > q_order_ || std::abs(kv.first.second) > z_window_;
  });
  for (const auto& [k, v] : o.c_) add(k.first, k.second, -v);
  return *this;
}

CharSeries CharSeries::operator*(const CharSeries& o) const {
  CharSeries r(std::min(q_order_, o.q_order_), std::min(z_window_, o.z_window_));
  for (const auto& [ka, va] : c_) {
    if (ka.first > r.q_order_) break;
    for (const auto& [kb, vb] : o.c_) {
      long q = ka.first + kb.first;
      if (q > r.q_order_) break;
      r.add(q, ka.second + kb.second, va * vb);
    }
  }
  return r;
}

CharSeries CharSeries::scale_q(long k) const {
  CharSeries r(q_order_ * k, z_window_);
  for (const auto& [key, v] : c_) r.set(key.first * k, key.second, v);
  return r;
}

CharSeries CharSeries::shift(long dq_quarters, int dz) const {
  CharSeries r(q_order_ + dq_quarters, z_window_);
  for (const auto& [key, v] : c_) r.set(key.first + dq_quarters, key.second + dz, v);
  return r;
}

CharSeries CharSeries::project_z0() const {
  CharSeries r(q_order_, 0);
  for (const auto& [key, v] : c_)
    if (key.second == 0) r.set(key.first, 0, v);
  return r;
}

CharSeries CharSeries::specialize_z1() const {
  CharSeries r(q_order_, 0);
  for (const auto& [key, v] : c_) r.add(key.first, 0, v);
  return r;
}

CharSeries CharSeries::reciprocal() const {
  for (const auto& [key, v] : c_)
    if (key.second != 0)
      throw DomainError("reciprocal requires a z-free series");
  Rat a0 = coeff(0, 0);
  if (a0 == 0) throw DomainError("series not invertible: zero constant term");
  CharSeries r(q_order_, z_window_);
  // degree-by-degree on the quarter lattice
  std::vector<Rat> inv(static_cast<size_t>(q_order_) + 1, Rat(0));
  inv[0] = Rat(1) / a0;
  for (long k = 1; k <= q_order_; ++k) {
    Rat acc(0);
    for (const auto& [key, v] : c_) {
      long j = key.first;
      if (j <= 0 || j > k) continue;
      acc += v * inv[static_cast<size_t>(k - j)];
    }
    if (acc != 0) inv[static_cast<size_t>(k)] = -acc / a0;
  }
  for (long k = 0; k <= q_order_; ++k)
    r.set(k, 0, inv[static_cast<size_t>(k)]);
  return r;
}

std::optional<CharSeries::Key> CharSeries::first_discrepancy(
    const CharSeries& o) const {
  long qo = std::min(q_order_, o.q_order_);
  int zw = std::min(z_window_, o.z_window_);
  auto ita = c_.begin();
  auto itb = o.c_.begin();
  auto skip = [&](Coeffs::const_iterator it, const Coeffs& m) {
    while (it != m.end() &&
           (it->first.first > qo || std::abs(it->first.second) > zw))
      ++it;
    return it;
  };
  while (true) {
    ita = skip(ita, c_);
    itb = skip(itb, o.c_);
    if (ita == c_.end() && itb == o.c_.end()) return std::nullopt;
    if (ita == c_.end()) return itb->first;
    if (itb == o.c_.end()) return ita->first;
    if (ita->first != itb->first)
      return std::min(ita->first, itb->first);
    if (ita->second != itb->second) return ita->first;
    ++ita;
    ++itb;
  }
}

bool CharSeries::all_coeffs_nonnegative() const {
  for (const auto& [k, v] : c_)
    if (v < 0) return false;
  return true;
}

std::string CharSeries::to_json() const {
  std::string s = "[";
  bool first = true;
  for (const auto& [k, v] : c_) {
    if (!first) s += ",";
    s += "{\"z\":" + std::to_string(k.second) +
         ",\"q4\":" + std::to_string(k.first) + ",\"coeff\":\"" +
         rat_to_string(v) + "\"}";
    first = false;
  }
  return s + "]";
}

std::string CharSeries::to_csv() const {
  std::string s = "z,q4,coeff\n";
  for (const auto& [k, v] : c_)
    s += std::to_string(k.second) + "," + std::to_string(k.first) + "," +
         rat_to_string(v) + "\n";
  return s;
}

namespace {

// z-headroom so that dropped high-|z| intermediates cannot feed back into
// the reported window: any z-degree M term costs at least ~4M^2 quarters
int internal_window(long q_order, int z_window) {
  int extra = 2;
  while (4L * extra * extra < q_order + 1) ++extra;
  return z_window + extra;
}

// multiplies acc by (1 + c z^{dz} q^{dq}) in place
void mul_binomial(CharSeries& acc, const Rat& c, int dz, long dq) {
  CharSeries f(acc.q_order(), acc.z_window());
  f.set(0, 0, 1);
  f.set(dq, dz, c);
  acc = acc * f;
}

}  // namespace

CharSeries product_form(ProductForm which, SeriesOrders orders) {
  int zw = which == ProductForm::Jac1TwoVariable
               ? internal_window(orders.q_order, orders.z_window)
               : 0;
  CharSeries acc = CharSeries::one(orders.q_order, zw);
  switch (which) {
    case ProductForm::Jac1TwoVariable:
      // prod_{i>=1} (1 + z q^{2i-1/2})(1 + z^{-1} q^{2i-3/2})
      for (long i = 1; 8 * i - 6 <= orders.q_order; ++i) {
        if (8 * i - 2 <= orders.q_order) mul_binomial(acc, Rat(1), 1, 8 * i - 2);
        mul_binomial(acc, Rat(1), -1, 8 * i - 6);
      }
      break;
    case ProductForm::EulerEven:
      // prod_{i>=1} (1 - q^{2i})
      for (long i = 1; 8 * i <= orders.q_order; ++i)
        mul_binomial(acc, Rat(-1), 0, 8 * i);
      break;
    case ProductForm::NegQHalf:
      // prod_{i>=0} (1 + q^{1/2+i})
      for (long i = 0; 2 + 4 * i <= orders.q_order; ++i)
        mul_binomial(acc, Rat(1), 0, 2 + 4 * i);
      break;
  }
  // clamp back to the requested window
  CharSeries out(orders.q_order, orders.z_window);
  for (const auto& [k, v] : acc.coeffs()) out.set(k.first, k.second, v);
  return out;
}

CharSeries sum_form(SumForm which, SeriesOrders orders) {
  CharSeries out(orders.q_order, orders.z_window);
  switch (which) {
    case SumForm::Jac2TwoVariable: {
      // 1/prod(1-q^{2i}) * sum_n z^n q^{n/2 + n^2}
      CharSeries theta(orders.q_order, orders.z_window);
      for (long n = -orders.z_window; n <= orders.z_window; ++n) {
        long q4 = 4 * n * n + 2 * n;
        if (q4 <= orders.q_order) theta.add(q4, static_cast<int>(n), Rat(1));
      }
      CharSeries inv =
          product_form(ProductForm::EulerEven, {orders.q_order, 0}).reciprocal();
      // z-free reciprocal times theta
      CharSeries prod(orders.q_order, orders.z_window);
      for (const auto& [ka, va] : theta.coeffs())
        for (const auto& [kb, vb] : inv.coeffs())
          prod.add(ka.first + kb.first, ka.second, va * vb);
      out = prod;
      break;
    }
    case SumForm::JacidTheta:
      // sum_m z^m q^{m(2m+1)/2}
      for (long m = -orders.z_window; m <= orders.z_window; ++m) {
        long q4 = 2 * m * (2 * m + 1);
        if (q4 >= 0 && q4 <= orders.q_order)
          out.add(q4, static_cast<int>(m), Rat(1));
      }
      break;
    case SumForm::CharHalfEven:
    case SumForm::CharHalfOdd: {
      int want_odd = which == SumForm::CharHalfOdd ? 1 : 0;
      CharSeries theta(orders.q_order, 0);
      for (long n = 0; 4 * n * n - 2 * n <= orders.q_order; ++n) {
        for (long sn : {n, -n}) {
          long q4 = 4 * sn * sn + 2 * sn;
          if ((((sn % 2) + 2) % 2) == want_odd && q4 <= orders.q_order)
            theta.add(q4, 0, Rat(1));
          if (n == 0) break;  // count n = 0 once
        }
      }
      CharSeries inv =
          product_form(ProductForm::EulerEven, {orders.q_order, 0}).reciprocal();
      out = theta * inv;
      break;
    }
  }
  return out;
}

CharSeries euler_inverse(long step_quarters, long q_order) {
  CharSeries acc = CharSeries::one(q_order, 0);
  for (long i = 1; step_quarters * i <= q_order; ++i)
    mul_binomial(acc, Rat(-1), 0, step_quarters * i);
  return acc.reciprocal();
}

CharSeries known_character_c1_generic(const Rat& h, long q_order) {
  Rat q4 = h * 4;
  if (q4.get_den() != 1)
    throw DomainError("weight off the quarter-integer lattice: " +
                      rat_to_string(h));
  long off = q4.get_num().get_si();
  if (off > q_order) return CharSeries(q_order, 0);
  CharSeries inv = euler_inverse(4, q_order - off);
  return inv.shift(off, 0);
}

CharSeries known_character_c1_degenerate(long m, long q_order) {
  // (q^{m^2/4} - q^{(m+2)^2/4}) / prod(1-q^i)
  long lo = m * m, hi = (m + 2) * (m + 2);
  CharSeries num(q_order, 0);
  num.add(lo, 0, Rat(1));
  num.add(hi, 0, Rat(-1));
  return num * euler_inverse(4, q_order);
}

CharSeries known_character_ising0(long q_order) {
  return sum_form(SumForm::CharHalfEven, {q_order, 0});
}

CharSeries known_character_ising_half(long q_order) {
  return sum_form(SumForm::CharHalfOdd, {q_order, 0});
}

JacobiCheckResult jacobi_check(long q_order, int z_window) {
  SeriesOrders orders{q_order, z_window};
  int zw = internal_window(q_order, z_window);
  CharSeries lhs = CharSeries::one(q_order, zw);
  for (long i = 1; 8 * i - 6 <= q_order; ++i) {
    if (8 * i <= q_order) mul_binomial(lhs, Rat(-1), 0, 8 * i);
    if (8 * i - 2 <= q_order) mul_binomial(lhs, Rat(1), 1, 8 * i - 2);
    mul_binomial(lhs, Rat(1), -1, 8 * i - 6);
  }
  CharSeries lhs_clamped(q_order, z_window);
  for (const auto& [k, v] : lhs.coeffs()) lhs_clamped.set(k.first, k.second, v);
  CharSeries rhs = sum_form(SumForm::JacidTheta, orders);
  auto disc = lhs_clamped.first_discrepancy(rhs);
  return {!disc.has_value(), disc};
}

std::vector<long> partition_numbers(int n) {
  std::vector<long> p(static_cast<size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int k = part; k <= n; ++k) p[static_cast<size_t>(k)] += p[static_cast<size_t>(k - part)];
  return p;
}

}  // namespace virfock

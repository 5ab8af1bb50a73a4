#ifndef VIRFOCK_SERIES_HPP
#define VIRFOCK_SERIES_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "virfock/rational.hpp"

namespace virfock {

// Truncated bivariate series in z (integer exponents) and q (exponents on
// the quarter-integer lattice, stored as integer quarters). Exact rational
// coefficients; terms beyond q_order or |z| > z_window are dropped.
class CharSeries {
 public:
  // key = (q_quarters, z_exp); map order gives the canonical term order
  using Key = std::pair<long, int>;
  using Coeffs = std::map<Key, Rat>;

  CharSeries(long q_order, int z_window)
      : q_order_(q_order), z_window_(z_window) {}

  static CharSeries one(long q_order, int z_window) {
    CharSeries s(q_order, z_window);
    s.set(0, 0, 1);
    return s;
  }

  long q_order() const { return q_order_; }
  int z_window() const { return z_window_; }
  const Coeffs& coeffs() const { return c_; }

  Rat coeff(long q_quarters, int z_exp) const;
  void set(long q_quarters, int z_exp, Rat v);
  void add(long q_quarters, int z_exp, const Rat& v);
  bool is_zero() const { return c_.empty(); }

  CharSeries& operator+=(const CharSeries& o);
  CharSeries& operator-=(const CharSeries& o);
  CharSeries operator*(const CharSeries& o) const;
  friend CharSeries operator+(CharSeries x, const CharSeries& y) { return x += y; }
  friend CharSeries operator-(CharSeries x, const CharSeries& y) { return x -= y; }

  bool operator==(const CharSeries& o) const { return c_ == o.c_; }

  // multiplies every exponent: q -> q^k (k>0)
  CharSeries scale_q(long k) const;
  // multiplies by the monomial z^{dz} q^{dq/4}
  CharSeries shift(long dq_quarters, int dz) const;
  // restriction to z-degree 0 column, or full z=1 specialization
  CharSeries project_z0() const;
  CharSeries specialize_z1() const;

  // 1/this; requires z-free input with nonzero constant term
  CharSeries reciprocal() const;

  // first cell where the two series differ, in canonical order
  std::optional<Key> first_discrepancy(const CharSeries& o) const;

  bool all_coeffs_nonnegative() const;

  std::string to_json() const;
  std::string to_csv() const;

 private:
  Coeffs c_;
  long q_order_;
  int z_window_;
};

// Truncation orders for the builders below.
struct SeriesOrders {
  long q_order;  // quarters
  int z_window;
};

enum class ProductForm { Jac1TwoVariable, EulerEven, NegQHalf };
enum class SumForm { Jac2TwoVariable, JacidTheta, CharHalfEven, CharHalfOdd };

CharSeries product_form(ProductForm which, SeriesOrders orders);
CharSeries sum_form(SumForm which, SeriesOrders orders);

// c=1 and c=1/2 character formulas (z-free).
CharSeries known_character_c1_generic(const Rat& h, long q_order);
CharSeries known_character_c1_degenerate(long m, long q_order);
CharSeries known_character_ising0(long q_order);
CharSeries known_character_ising_half(long q_order);

struct JacobiCheckResult {
  bool ok;
  std::optional<CharSeries::Key> first_discrepancy;
};

// Expands both sides of the triple-product identity
// prod (1-q^{2i})(1+z q^{2i-1/2})(1+z^{-1} q^{2i-3/2}) = sum_m z^m q^{m(2m+1)/2}
// and compares exactly.
JacobiCheckResult jacobi_check(long q_order, int z_window);

// partition numbers p(0..n)
std::vector<long> partition_numbers(int n);

// 1/prod_{i>=1}(1 - q^{i*step}) as a z-free series; step in quarter units
CharSeries euler_inverse(long step_quarters, long q_order);

}  // namespace virfock

#endif

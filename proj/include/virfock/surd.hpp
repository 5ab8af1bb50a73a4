#ifndef VIRFOCK_SURD_HPP
#define VIRFOCK_SURD_HPP

#include <cstdint>
#include <string>
#include <utility>

#include "virfock/rational.hpp"

namespace virfock {

// Splits n = squarefree * factor^2, returns (squarefree, factor).
std::pair<long, long> normalize_radicand(long n);

// Exact scalar a + b*sqrt(d) in Q(sqrt(d)), d squarefree.
// d == 1 tags a pure rational (then b == 0 after normalization).
class Surd {
 public:
  Surd() : a_(0), b_(0), d_(1) {}
  Surd(long v) : a_(v), b_(0), d_(1) {}  // NOLINT(runtime/explicit)
  Surd(const Rat& v) : a_(v), b_(0), d_(1) {}  // NOLINT(runtime/explicit)
  Surd(Rat rat_part, Rat surd_part, long radicand);

  const Rat& rat_part() const { return a_; }
  const Rat& surd_part() const { return b_; }
  long radicand() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  Surd operator-() const;
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o);

  friend Surd operator+(Surd x, const Surd& y) { return x += y; }
  friend Surd operator-(Surd x, const Surd& y) { return x -= y; }
  friend Surd operator*(Surd x, const Surd& y) { return x *= y; }
  friend Surd operator/(Surd x, const Surd& y) { return x /= y; }

  bool operator==(const Surd& o) const { return a_ == o.a_ && b_ == o.b_ && (b_ == 0 || d_ == o.d_); }
  bool operator!=(const Surd& o) const { return !(*this == o); }

  // Sign of the real value a + b*sqrt(d); exact, no floating point.
  int sign() const;
  // Total order on real values; throws RadicandMismatch on incompatible radicands.
  int compare(const Surd& o) const;
  bool operator<(const Surd& o) const { return compare(o) < 0; }

  // "p/q" for rationals, "p/q+r/s*sqrt(d)" otherwise; round-trips exactly.
  std::string str() const;
  static Surd parse(const std::string& s);

  // Merged radicand of two compatible values; throws RadicandMismatch.
  static long common_radicand(const Surd& x, const Surd& y);

 private:
  Rat a_, b_;
  long d_;
};

inline Surd sqrt_surd(long n) {
  auto [sf, f] = normalize_radicand(n);
  return Surd(Rat(0), Rat(f), sf);
}

}  // namespace virfock

#endif

#include "virfock/surd.hpp"

namespace virfock {

std::pair<long, long> normalize_radicand(long n) {
  if (n < 0) throw DomainError("negative radicand");
  if (n == 0) return {0, 1};
  long sf = 1, f = 1;
  for (long p = 2; p * p <= n; ++p) {
    long e = 0;
    while (n % p == 0) { n /= p; ++e; }
    for (long i = 0; i < e / 2; ++i) f *= p;
    if (e % 2) sf *= p;
  }
  sf *= n;  // leftover prime
  return {sf, f};
}

Surd::Surd(Rat rat_part, Rat surd_part, long radicand)
    : a_(std::move(rat_part)), b_(std::move(surd_part)), d_(radicand) {
  if (d_ < 0) throw DomainError("negative radicand");
  auto [sf, f] = normalize_radicand(d_);
  if (f != 1) {
    b_ *= f;
    d_ = sf;
  }
  if (d_ == 0) { b_ = 0; d_ = 1; }  // sqrt(0) = 0
  if (d_ == 1) { a_ += b_; b_ = 0; }
  if (b_ == 0) d_ = 1;
}

long Surd::common_radicand(const Surd& x, const Surd& y) {
  if (x.b_ == 0) return y.d_;
  if (y.b_ == 0) return x.d_;
  if (x.d_ != y.d_)
    throw RadicandMismatch("incompatible radicands " + std::to_string(x.d_) +
                           " vs " + std::to_string(y.d_));
  return x.d_;
}

Surd Surd::operator-() const {
  Surd r(*this);
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Surd& Surd::operator+=(const Surd& o) {
  d_ = common_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  if (b_ == 0) d_ = 1;
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  d_ = common_radicand(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  if (b_ == 0) d_ = 1;
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  long d = common_radicand(*this, o);
  Rat a = a_ * o.a_ + b_ * o.b_ * d;
  Rat b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = (b_ == 0) ? 1 : d;
  return *this;
}

Surd& Surd::operator/=(const Surd& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  long d = common_radicand(*this, o);
  // multiply by the conjugate: 1/(a+b sqrt d) = (a-b sqrt d)/(a^2-b^2 d)
  Rat norm = o.a_ * o.a_ - o.b_ * o.b_ * d;
  Rat a = (a_ * o.a_ - b_ * o.b_ * d) / norm;
  Rat b = (b_ * o.a_ - a_ * o.b_) / norm;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = (b_ == 0) ? 1 : d;
  return *this;
}

int Surd::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with b^2 d
  Rat diff = a_ * a_ - b_ * b_ * d_;
  int s = sgn(diff);
  return sa > 0 ? s : -s;
}

int Surd::compare(const Surd& o) const {
  Surd diff(*this);
  diff -= o;
  return diff.sign();
}

std::string Surd::str() const {
  if (b_ == 0) return rat_to_string(a_);
  std::string s = rat_to_string(a_);
  if (sgn(b_) >= 0) s += "+";
  s += rat_to_string(b_) + "*sqrt(" + std::to_string(d_) + ")";
  return s;
}

namespace {

// splits "A+B" / "A-B" at the top-level sign separating the surd term
bool split_sum(const std::string& s, std::string& lhs, std::string& rhs) {
  for (size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '+' &&
        s[i - 1] != '-' && s.find("sqrt", i) != std::string::npos) {
      lhs = s.substr(0, i);
      rhs = s.substr(s[i] == '+' ? i + 1 : i);  // keep a leading '-'
      return true;
    }
  }
  return false;
}

// parses "r*sqrt(d)", "sqrt(d)", "-sqrt(d)"
bool parse_surd_term(const std::string& s, Rat& coeff, long& d) {
  size_t pos = s.find("sqrt(");
  if (pos == std::string::npos || s.back() != ')') return false;
  std::string inner = s.substr(pos + 5, s.size() - pos - 6);
  try {
    d = std::stol(inner);
  } catch (...) {
    return false;
  }
  std::string pre = s.substr(0, pos);
  if (!pre.empty() && pre.back() == '*') pre.pop_back();
  if (pre.empty()) coeff = 1;
  else if (pre == "-") coeff = -1;
  else coeff = rat_from_string(pre);
  return true;
}

}  // namespace

Surd Surd::parse(const std::string& s0) {
  std::string s;
  for (char c : s0)
    if (c != ' ') s += c;
  if (s.empty()) throw ParseError("empty surd");
  std::string lhs, rhs;
  Rat coeff;
  long d;
  if (split_sum(s, lhs, rhs)) {
    if (!parse_surd_term(rhs, coeff, d)) throw ParseError("bad surd: " + s0);
    return Surd(rat_from_string(lhs), coeff, d);
  }
  if (parse_surd_term(s, coeff, d)) return Surd(Rat(0), coeff, d);
  return Surd(rat_from_string(s));
}

}  // namespace virfock

#ifndef VIRFOCK_RATIONAL_HPP
#define VIRFOCK_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace virfock {

using Rat = mpq_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RadicandMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Canonical text form: "p" or "p/q", q > 0, gcd(p,q)=1.
std::string rat_to_string(const Rat& r);

// Parses "p" or "p/q"; exact, round-trips bit-identically.
Rat rat_from_string(const std::string& s);

}  // namespace virfock

#endif

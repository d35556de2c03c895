#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace numgroup {

/// Arbitrary-precision rational; canonical form (reduced, positive
/// denominator) is maintained by GMP for all arithmetic results.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Parses "p/q" or "p" (optional sign, base 10). Throws on malformed input
/// or zero denominator.
inline Rational parse_rational(const std::string& s) {
  auto bad = [&]() -> std::runtime_error {
    return std::runtime_error("malformed rational '" + s + "'");
  };
  if (s.empty()) throw bad();
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (num.empty() || den.empty() || den.find('/') != std::string::npos) throw bad();
  }
  Integer n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0) throw bad();
  if (d == 0) throw std::runtime_error("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Floor of a rational as an exact integer.
inline Integer rational_floor(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

/// Least common multiple of the denominators of a coordinate list.
inline Integer common_denominator(const std::vector<Rational>& xs) {
  Integer d = 1;
  for (const auto& x : xs) d = lcm(d, x.get_den());
  return d;
}

}  // namespace numgroup

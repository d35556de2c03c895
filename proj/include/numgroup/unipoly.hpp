#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "numgroup/rational.hpp"

namespace numgroup {

struct PolyExtGcd;

/// Univariate polynomial over Q, coefficients stored low degree first and
/// kept free of trailing zeros. The zero polynomial has an empty
/// coefficient list and degree() == -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly variable();  // t
  static UniPoly from_integers(std::initializer_list<long> coeffs);
  /// n-th cyclotomic polynomial, exact integer coefficients.
  static UniPoly cyclotomic(unsigned n);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool has_integer_coeffs() const;
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Coefficient of t^k; zero outside the stored range.
  Rational coeff(int k) const;
  Rational leading() const;

  UniPoly monic() const;
  Rational eval(const Rational& x) const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& c, const UniPoly& p);
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  /// Exact division with remainder; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

  /// Monic greatest common divisor (Euclidean algorithm over Q).
  static UniPoly gcd(UniPoly a, UniPoly b);

  static PolyExtGcd extended_gcd(const UniPoly& a, const UniPoly& b);

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

struct PolyExtGcd {
  UniPoly g, s, t;  // g = s*a + t*b, g monic (or zero)
};

}  // namespace numgroup

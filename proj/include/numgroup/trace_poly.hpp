#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "numgroup/field_element.hpp"

namespace numgroup {

/// Sparse polynomial in x, y, z with integer coefficients, canonical sorted
/// monomial order. The three variables stand for tr(A), tr(B), tr(AB) of an
/// SL(2) generator pair.
class TracePoly {
 public:
  using Exponents = std::array<int, 3>;

  TracePoly() = default;
  static TracePoly constant(long c);
  static TracePoly constant(const Integer& c);
  static TracePoly x();
  static TracePoly y();
  static TracePoly z();
  static TracePoly monomial(const Exponents& e, const Integer& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Integer>& terms() const { return terms_; }

  TracePoly operator-() const;
  friend TracePoly operator+(const TracePoly& a, const TracePoly& b);
  friend TracePoly operator-(const TracePoly& a, const TracePoly& b);
  friend TracePoly operator*(const TracePoly& a, const TracePoly& b);
  bool operator==(const TracePoly& o) const { return terms_ == o.terms_; }

  /// Substitutes field elements for x, y, z.
  FieldElement eval(const FieldElement& x, const FieldElement& y, const FieldElement& z) const;

  /// Sorted (exponent triple, coefficient) list.
  std::vector<std::pair<Exponents, Integer>> entries() const;

  std::string to_string() const;

 private:
  void prune();
  std::map<Exponents, Integer> terms_;
};

}  // namespace numgroup

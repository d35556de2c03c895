#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "numgroup/number_field.hpp"
#include "numgroup/rational.hpp"
#include "numgroup/unipoly.hpp"

namespace numgroup {

/// Exact element of a number field, stored as power-basis coordinates.
/// Arithmetic never leaves the field; division is exact (extended Euclid
/// modulo the defining polynomial). Immutable value type.
class FieldElement {
 public:
  FieldElement(FieldPtr field, std::vector<Rational> coords);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& b);
  FieldElement& operator-=(const FieldElement& b);
  FieldElement& operator*=(const FieldElement& b);
  bool operator==(const FieldElement& o) const;

  FieldElement inverse() const;

  /// Monic lowest-degree rational polynomial vanishing at this element
  /// (exact kernel computation on power-basis coordinates).
  UniPoly minimal_polynomial() const;

  /// True iff the minimal polynomial has integer coefficients.
  bool is_algebraic_integer() const;

  /// Integral-basis coordinates when all of them are integers, i.e. the
  /// element lies in the declared O_K; nullopt otherwise.
  std::optional<std::vector<Rational>> integral_coords() const;
  bool is_in_ok() const { return integral_coords().has_value(); }

  /// Coordinates with respect to the integral basis, not necessarily
  /// integral (exact solve against the declared basis).
  std::vector<Rational> basis_coords() const;

  /// Field norm N(a) = det of the multiplication-by-a matrix.
  Rational norm() const;

  /// Numeric value under the field's pinned embedding, when present.
  std::optional<std::complex<double>> approx() const;

  std::string to_string() const;
  std::vector<std::string> coord_strings() const;

 private:
  FieldPtr field_;
  std::vector<Rational> coords_;
};

/// Evaluates a rational polynomial at a field element (Horner).
FieldElement eval(const UniPoly& p, const FieldElement& x);

/// Throws std::invalid_argument unless both elements live in the same field.
void require_same_field(const FieldElement& a, const FieldElement& b);

}  // namespace numgroup

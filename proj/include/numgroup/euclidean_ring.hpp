#pragma once

#include <optional>
#include <string>
#include <vector>

#include "numgroup/field_element.hpp"

namespace numgroup {

/// Euclidean division structure on the ring of integers O_K for the
/// norm-Euclidean fields this library supports: Q (ring Z) and the
/// quadratic fields Q(sqrt(d)) with d in {-11,-7,-3,-2,-1,2,3,5,13} in
/// their canonical presentation (defining polynomial t^2-d, classical
/// maximal-order basis). Division returns a = q*b + r with |N(r)| < |N(b)|.
class EuclideanOK {
 public:
  /// nullopt when the field is not one of the supported presentations.
  static std::optional<EuclideanOK> for_field(const FieldPtr& field);
  static bool supports(const FieldPtr& field) { return for_field(field).has_value(); }

  const FieldPtr& field() const { return field_; }
  std::string ring_name() const;

  /// Absolute field norm |N(a)|.
  Rational abs_norm(const FieldElement& a) const;

  struct DivResult {
    FieldElement quotient;
    FieldElement remainder;
  };

  /// Norm-decreasing division: deterministic grid search around the exact
  /// quotient, minimizing (|N(r)|, lexicographic coordinates of r).
  DivResult euclid_div(const FieldElement& a, const FieldElement& b) const;

  /// Canonical coset representative: the quotient has floored integral-basis
  /// coordinates, so the remainder's coordinates relative to p lie in [0,1).
  /// Idempotent; used to normalize entries above HNF pivots.
  DivResult canonical_rem(const FieldElement& a, const FieldElement& p) const;

  /// All units when the unit group is finite (imaginary quadratic); {1,-1}
  /// otherwise (enough for sign normalization).
  const std::vector<FieldElement>& units() const { return units_; }

  /// The canonical associate u*p: first-quadrant representative for Z[i],
  /// positive leading integral coordinate (lexicographically greatest among
  /// unit multiples) otherwise.
  FieldElement canonical_associate(const FieldElement& p) const;

  bool is_integral(const FieldElement& a) const { return a.is_in_ok(); }

 private:
  EuclideanOK(FieldPtr field, long quad_d);
  FieldPtr field_;
  long quad_d_ = 0;  // 0 for Q
  std::vector<FieldElement> units_;
};

}  // namespace numgroup

#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "numgroup/rational.hpp"
#include "numgroup/unipoly.hpp"

namespace numgroup {

class FieldElement;
class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// A number field K = Q[t]/(f) presented by a monic integral defining
/// polynomial together with an explicit integral basis for O_K. The basis
/// rows are power-basis coordinates; the defining polynomial is assumed
/// irreducible over Q (zero divisors discovered during inversion are
/// rejected as an input error). Immutable after construction.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  /// Q, presented as Q[t]/(t) with integral basis {1}.
  static FieldPtr rationals();

  /// Q(sqrt(d)) for squarefree d != 0, 1: defining polynomial t^2 - d and
  /// the classical maximal-order basis ({1, sqrt(d)} or {1, (1+sqrt(d))/2}
  /// when d = 1 mod 4).
  static FieldPtr quadratic(long d);

  /// General constructor. When no integral basis is given the power basis
  /// is used (callers are responsible for maximality when O_K semantics
  /// matter). The embedding, when given, is checked numerically against
  /// the roots of the defining polynomial to within 1e-6.
  static FieldPtr make(UniPoly defining_poly,
                       std::optional<std::vector<std::vector<Rational>>> integral_basis =
                           std::nullopt,
                       std::optional<std::complex<double>> embedding = std::nullopt);

  int degree() const { return degree_; }
  const UniPoly& defining_poly() const { return poly_; }
  const std::vector<std::vector<Rational>>& integral_basis() const { return basis_; }
  const std::vector<std::vector<Rational>>& integral_basis_inverse() const {
    return basis_inv_;
  }
  bool has_embedding() const { return embedding_.has_value(); }
  std::complex<double> embedding() const;
  bool is_real() const { return is_real_; }

  /// Structural identity: same defining polynomial and same integral basis.
  bool same_field(const NumberField& other) const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;  // the class of t
  FieldElement from_integer(long k) const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement from_coords(std::vector<Rational> coords) const;

  std::string to_string() const;

 private:
  NumberField(UniPoly poly, std::vector<std::vector<Rational>> basis,
              std::optional<std::complex<double>> embedding);
  void validate() const;

  UniPoly poly_;
  int degree_;
  std::vector<std::vector<Rational>> basis_;      // rows = O_K basis, power coords
  std::vector<std::vector<Rational>> basis_inv_;  // exact inverse of basis_
  std::optional<std::complex<double>> embedding_;
  bool is_real_ = false;
};

/// Numerical roots of a rational polynomial (Durand-Kerner); used only to
/// validate user-declared embeddings, never for exact decisions.
std::vector<std::complex<double>> approximate_roots(const UniPoly& p);

}  // namespace numgroup

#pragma once

#include <random>
#include <vector>

#include "numgroup/field_element.hpp"
#include "numgroup/square_matrix.hpp"

namespace numgroup::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int num_bound = 9, int den_bound = 6) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline FieldElement random_element(const FieldPtr& field, Rng& rng, int num_bound = 9,
                                   int den_bound = 6) {
  std::vector<Rational> coords;
  for (int i = 0; i < field->degree(); ++i)
    coords.push_back(random_rational(rng, num_bound, den_bound));
  return field->from_coords(std::move(coords));
}

/// Random O_K element: integer combination of the integral basis.
inline FieldElement random_integral_element(const FieldPtr& field, Rng& rng, int bound = 9) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  FieldElement acc = field->zero();
  for (const auto& row : field->integral_basis()) {
    FieldElement b = field->from_coords(std::vector<Rational>(row));
    acc += b * field->from_integer(coeff(rng));
  }
  return acc;
}

/// Random element of SL(2, K) as a short product of elementary matrices,
/// so the determinant is exactly one.
inline SquareMatrix random_sl2(const FieldPtr& field, Rng& rng, int factors = 3) {
  SquareMatrix m = SquareMatrix::identity(field, 2);
  std::uniform_int_distribution<int> side(0, 1);
  for (int k = 0; k < factors; ++k) {
    FieldElement t = random_element(field, rng, 3, 2);
    SquareMatrix e = SquareMatrix::identity(field, 2);
    if (side(rng))
      e.at(0, 1) = t;
    else
      e.at(1, 0) = t;
    m = m * e;
  }
  return m;
}

/// Random invertible rational matrix with bounded numerators/denominators.
inline SquareMatrix random_invertible(const FieldPtr& field, int n, Rng& rng, int num_bound = 6,
                                      int den_bound = 6) {
  while (true) {
    SquareMatrix m(field, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.at(i, j) = field->from_rational(random_rational(rng, num_bound, den_bound));
    if (!m.det().is_zero()) return m;
  }
}

}  // namespace numgroup::testing

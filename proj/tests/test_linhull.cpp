#include <doctest.h>

#include "numgroup/algebra_basis.hpp"
#include "numgroup/fricke.hpp"
#include "test_helpers.hpp"

using namespace numgroup;
using numgroup::testing::Rng;

namespace {

SquareMatrix rotation_a(const FieldPtr& field) {
  FieldElement zero = field->zero(), one = field->one();
  return SquareMatrix(field, 2, {zero, -one, one, zero});
}

SquareMatrix shear_b(const FieldPtr& field, const FieldElement& lam) {
  FieldElement zero = field->zero(), one = field->one();
  return SquareMatrix(field, 2, {one, lam, zero, one});
}

}  // namespace

TEST_CASE("matrix operations") {
  FieldPtr q = NumberField::rationals();
  SquareMatrix id = SquareMatrix::identity(q, 2);
  CHECK(id.trace() == q->from_integer(2));

  SquareMatrix a = rotation_a(q);
  CHECK(a.det() == q->one());
  SquareMatrix ainv = a.inverse();
  CHECK(ainv == SquareMatrix(q, 2, {q->zero(), q->one(), -q->one(), q->zero()}));
  CHECK(a * ainv == id);

  FieldElement lam = q->from_rational(Rational(5, 2));
  SquareMatrix b = shear_b(q, lam);
  CHECK((a * b).trace() == lam);
  CHECK(trace_product(a, b) == lam);

  SquareMatrix singular(q, 2, {q->one(), q->one(), q->one(), q->one()});
  CHECK(singular.det().is_zero());
  CHECK_THROWS_AS(singular.inverse(), std::domain_error);
}

TEST_CASE("trace is conjugation invariant") {
  Rng rng(314159);
  FieldPtr field = NumberField::quadratic(-1);
  for (int it = 0; it < 20; ++it) {
    SquareMatrix m(field, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = numgroup::testing::random_element(field, rng, 4, 3);
    SquareMatrix u = numgroup::testing::random_invertible(field, 3, rng, 4, 3);
    CHECK((u * m * u.inverse()).trace() == m.trace());
  }
}

TEST_CASE("algebra basis of the trivial group") {
  FieldPtr q = NumberField::rationals();
  AlgebraBasis basis = algebra_basis({SquareMatrix::identity(q, 2)});
  CHECK(basis.dimension() == 1);
  CHECK(basis.words[0] == Word::identity());
  // Gram is [tr(Id Id)] = [2], nonzero, so the trivial group passes the test.
  CHECK(basis.gram.at(0, 0) == q->from_integer(2));
  CHECK(is_completely_reducible(basis));
}

TEST_CASE("algebra basis of Pi(i) fills the full matrix algebra") {
  FieldPtr qi = NumberField::quadratic(-1);
  GroupSpec spec = pi_lambda(qi, qi->generator());
  AlgebraBasis basis = algebra_basis(spec.generators);
  CHECK(basis.dimension() == 4);
  CHECK(is_completely_reducible(basis));
  CHECK_FALSE(basis.gram.det().is_zero());

  // Dimension 4 = n^2 means every elementary matrix lies in the span.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      SquareMatrix e(qi, 2);
      e.at(i, j) = qi->one();
      CHECK(in_span(basis.matrices, e));
    }
}

TEST_CASE("algebra basis of the unipotent example is two dimensional") {
  FieldPtr q = NumberField::rationals();
  SquareMatrix b = shear_b(q, q->one());
  AlgebraBasis basis = algebra_basis({b});
  REQUIRE(basis.dimension() == 2);
  CHECK(basis.matrices[0] == SquareMatrix::identity(q, 2));
  CHECK(basis.matrices[1] == b);

  // Gram [[2,2],[2,2]], determinant exactly zero.
  CHECK(basis.gram.at(0, 0) == q->from_integer(2));
  CHECK(basis.gram.at(0, 1) == q->from_integer(2));
  CHECK(basis.gram.at(1, 0) == q->from_integer(2));
  CHECK(basis.gram.at(1, 1) == q->from_integer(2));
  CHECK(basis.gram.det().is_zero());
  CHECK_FALSE(is_completely_reducible(basis));
  CHECK_THROWS_AS(dual_basis(basis), std::domain_error);
}

TEST_CASE("closure output is multiplication stable") {
  FieldPtr qi = NumberField::quadratic(-1);
  GroupSpec spec = pi_lambda(qi, qi->generator());
  AlgebraBasis basis = algebra_basis(spec.generators);
  for (const auto& b : basis.matrices)
    for (size_t g = 0; g < spec.generators.size(); ++g) {
      CHECK(in_span(basis.matrices, b * spec.generators[g]));
      CHECK(in_span(basis.matrices, b * spec.inverses[g]));
      CHECK(in_span(basis.matrices, spec.generators[g] * b));
    }
}

TEST_CASE("basis words are breadth-first and deterministic") {
  FieldPtr qi = NumberField::quadratic(-1);
  GroupSpec spec = pi_lambda(qi, qi->generator());
  AlgebraBasis basis = algebra_basis(spec.generators);
  for (size_t k = 1; k < basis.words.size(); ++k)
    CHECK(basis.words[k - 1].length() <= basis.words[k].length());
  AlgebraBasis again = algebra_basis(spec.generators);
  REQUIRE(again.dimension() == basis.dimension());
  for (int k = 0; k < basis.dimension(); ++k) {
    CHECK(again.words[static_cast<size_t>(k)] == basis.words[static_cast<size_t>(k)]);
    CHECK(again.matrices[static_cast<size_t>(k)] == basis.matrices[static_cast<size_t>(k)]);
  }
}

TEST_CASE("dual basis pairing") {
  FieldPtr q = NumberField::rationals();
  AlgebraBasis trivial = algebra_basis({SquareMatrix::identity(q, 2)});
  auto dual = dual_basis(trivial);
  REQUIRE(dual.size() == 1);
  CHECK(dual[0] == SquareMatrix::identity(q, 2).scaled(q->from_rational(Rational(1, 2))));

  FieldPtr qi = NumberField::quadratic(-1);
  GroupSpec spec = pi_lambda(qi, qi->generator());
  AlgebraBasis basis = algebra_basis(spec.generators);
  auto duals = dual_basis(basis);  // pairing identity checked inside
  REQUIRE(duals.size() == 4);

  // Re-dualizing returns to the original span.
  for (const auto& d : duals) CHECK(in_span(basis.matrices, d));
  for (const auto& b : basis.matrices) CHECK(in_span(duals, b));
}

TEST_CASE("non-invertible generators are rejected") {
  FieldPtr q = NumberField::rationals();
  SquareMatrix singular(q, 2, {q->one(), q->one(), q->one(), q->one()});
  CHECK_THROWS_AS(algebra_basis({singular}), std::domain_error);
}

#include <doctest.h>

#include "numgroup/field_element.hpp"
#include "numgroup/number_field.hpp"
#include "numgroup/unipoly.hpp"
#include "test_helpers.hpp"

using namespace numgroup;
using numgroup::testing::Rng;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4/2") == Rational(-2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(parse_rational("8/4")) == "2");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("1.5"));
  CHECK_THROWS(parse_rational("a"));
  CHECK_THROWS(parse_rational(""));
  CHECK_THROWS(parse_rational("1/2/3"));
}

TEST_CASE("unipoly arithmetic and division") {
  UniPoly f = UniPoly::from_integers({-1, 0, 1});  // t^2 - 1
  UniPoly g = UniPoly::from_integers({1, 1});      // t + 1
  auto [q, r] = f.divmod(g);
  CHECK(q == UniPoly::from_integers({-1, 1}));
  CHECK(r.is_zero());
  CHECK(UniPoly::gcd(f, g) == g.monic());
  CHECK(f.eval(Rational(3)) == Rational(8));
  CHECK(UniPoly().degree() == -1);
  CHECK((f - f).is_zero());

  auto ext = UniPoly::extended_gcd(UniPoly::from_integers({0, 1}), f);
  CHECK((ext.s * UniPoly::from_integers({0, 1}) + ext.t * f) == ext.g);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(UniPoly::cyclotomic(1) == UniPoly::from_integers({-1, 1}));
  CHECK(UniPoly::cyclotomic(4) == UniPoly::from_integers({1, 0, 1}));
  CHECK(UniPoly::cyclotomic(6) == UniPoly::from_integers({1, -1, 1}));
  CHECK(UniPoly::cyclotomic(10) == UniPoly::from_integers({1, -1, 1, -1, 1}));
  CHECK(UniPoly::cyclotomic(12).degree() == 4);
}

TEST_CASE("field arithmetic on built-in fields") {
  FieldPtr qi = NumberField::quadratic(-1);
  FieldElement i = qi->generator();
  CHECK(i * i == qi->from_integer(-1));  // defining relation

  // Golden ratio relation phi^2 = phi + 1 in Q(sqrt 5).
  FieldPtr q5 = NumberField::quadratic(5);
  FieldElement phi = q5->from_coords({Rational(1, 2), Rational(1, 2)});
  CHECK(phi * phi == q5->from_coords({Rational(3, 2), Rational(1, 2)}));
  CHECK(phi * phi == phi + q5->one());

  CHECK_THROWS_AS(qi->one() / qi->zero(), std::domain_error);
  CHECK_THROWS_AS(qi->one() + q5->one(), std::invalid_argument);
}

TEST_CASE("a/a is one, (a/b)*b is a") {
  Rng rng(20240811);
  for (FieldPtr field : {NumberField::rationals(), NumberField::quadratic(-1),
                         NumberField::quadratic(5), NumberField::quadratic(-5)}) {
    for (int it = 0; it < 30; ++it) {
      FieldElement a = numgroup::testing::random_element(field, rng);
      FieldElement b = numgroup::testing::random_element(field, rng);
      if (!a.is_zero()) CHECK(a / a == field->one());
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("minimal polynomials") {
  FieldPtr qi = NumberField::quadratic(-1);
  CHECK(qi->zero().minimal_polynomial() == UniPoly::variable());
  CHECK(qi->generator().minimal_polynomial() == UniPoly::from_integers({1, 0, 1}));

  FieldPtr q5 = NumberField::quadratic(5);
  FieldElement phi = q5->from_coords({Rational(1, 2), Rational(1, 2)});
  CHECK(phi.minimal_polynomial() == UniPoly::from_integers({-1, -1, 1}));

  // Degree-1 elements of a degree-2 field.
  CHECK(q5->from_rational(Rational(7, 3)).minimal_polynomial().degree() == 1);
}

TEST_CASE("minimal polynomial vanishes at its element") {
  Rng rng(77);
  for (FieldPtr field : {NumberField::quadratic(-1), NumberField::quadratic(5),
                         NumberField::make(UniPoly::cyclotomic(7))}) {
    for (int it = 0; it < 15; ++it) {
      FieldElement a = numgroup::testing::random_element(field, rng, 4, 3);
      CHECK(eval(a.minimal_polynomial(), a).is_zero());
    }
  }
}

TEST_CASE("algebraic integer tests") {
  FieldPtr qi = NumberField::quadratic(-1);
  CHECK_FALSE(qi->from_rational(Rational(1, 2)).is_algebraic_integer());
  CHECK_FALSE(qi->from_coords({Rational(0), Rational(1, 2)}).is_in_ok());

  FieldPtr q5 = NumberField::quadratic(5);
  FieldElement phi = q5->from_coords({Rational(1, 2), Rational(1, 2)});
  CHECK(phi.is_algebraic_integer());
  auto coords = phi.integral_coords();
  REQUIRE(coords.has_value());
  CHECK(*coords == std::vector<Rational>{Rational(0), Rational(1)});

  FieldPtr qm5 = NumberField::quadratic(-5);
  CHECK(qm5->generator().is_algebraic_integer());

  CHECK(qi->one().integral_coords() == std::vector<Rational>{Rational(1), Rational(0)});
}

TEST_CASE("is_algebraic_integer agrees with integral coordinates") {
  Rng rng(4242);
  for (FieldPtr field :
       {NumberField::rationals(), NumberField::quadratic(-1), NumberField::quadratic(-3),
        NumberField::quadratic(5), NumberField::quadratic(13), NumberField::quadratic(-5)}) {
    for (int it = 0; it < 40; ++it) {
      FieldElement a = numgroup::testing::random_element(field, rng, 6, 4);
      CHECK(a.is_algebraic_integer() == a.is_in_ok());
    }
  }
}

TEST_CASE("algebraic integers are closed under sum and product") {
  Rng rng(99);
  for (FieldPtr field : {NumberField::quadratic(-3), NumberField::quadratic(5)}) {
    for (int it = 0; it < 25; ++it) {
      FieldElement a = numgroup::testing::random_integral_element(field, rng);
      FieldElement b = numgroup::testing::random_integral_element(field, rng);
      REQUIRE(a.is_algebraic_integer());
      REQUIRE(b.is_algebraic_integer());
      CHECK((a + b).is_algebraic_integer());
      CHECK((a * b).is_algebraic_integer());
    }
  }
}

TEST_CASE("quadratic field construction") {
  FieldPtr qi = NumberField::quadratic(-1);
  CHECK(qi->integral_basis() ==
        std::vector<std::vector<Rational>>{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
  CHECK_FALSE(qi->is_real());

  FieldPtr q5 = NumberField::quadratic(5);
  CHECK(q5->integral_basis() ==
        std::vector<std::vector<Rational>>{{Rational(1), Rational(0)},
                                           {Rational(1, 2), Rational(1, 2)}});
  CHECK(q5->is_real());
  // The d=1 mod 4 basis element really is integral.
  CHECK(q5->from_coords({Rational(1, 2), Rational(1, 2)}).is_algebraic_integer());

  FieldPtr qm5 = NumberField::quadratic(-5);
  CHECK(qm5->integral_basis()[1] == std::vector<Rational>{Rational(0), Rational(1)});

  CHECK_THROWS(NumberField::quadratic(0));
  CHECK_THROWS(NumberField::quadratic(1));
  CHECK_THROWS(NumberField::quadratic(12));
  CHECK_THROWS(NumberField::quadratic(-4));
}

TEST_CASE("field validation rejects bad input") {
  // Non-monic.
  CHECK_THROWS(NumberField::make(UniPoly::from_integers({1, 0, 2})));
  // Non-integral coefficients.
  CHECK_THROWS(NumberField::make(UniPoly({Rational(1, 2), Rational(1)})));
  // Basis without 1.
  CHECK_THROWS(NumberField::make(
      UniPoly::from_integers({1, 0, 1}),
      std::vector<std::vector<Rational>>{{Rational(2), Rational(0)}, {Rational(0), Rational(1)}}));
  // Singular basis.
  CHECK_THROWS(NumberField::make(
      UniPoly::from_integers({1, 0, 1}),
      std::vector<std::vector<Rational>>{{Rational(1), Rational(0)}, {Rational(1), Rational(0)}}));
  // Non-integral basis row.
  CHECK_THROWS(NumberField::make(
      UniPoly::from_integers({1, 0, 1}),
      std::vector<std::vector<Rational>>{{Rational(1), Rational(0)},
                                         {Rational(0), Rational(1, 2)}}));
  // Embedding that is not a root.
  CHECK_THROWS(NumberField::make(UniPoly::from_integers({1, 0, 1}), std::nullopt,
                                 std::complex<double>(3.0, 0.0)));
}

TEST_CASE("realness is pinned by the embedding") {
  CHECK(NumberField::rationals()->is_real());
  CHECK(NumberField::quadratic(5)->is_real());
  CHECK_FALSE(NumberField::quadratic(-1)->is_real());
  // No embedding given: not classified as real.
  FieldPtr f = NumberField::make(UniPoly::from_integers({-2, 0, 1}));
  CHECK_FALSE(f->has_embedding());
  CHECK_FALSE(f->is_real());
}

TEST_CASE("element serialization strings") {
  FieldPtr q5 = NumberField::quadratic(5);
  FieldElement phi = q5->from_coords({Rational(1, 2), Rational(1, 2)});
  CHECK(phi.coord_strings() == std::vector<std::string>{"1/2", "1/2"});
  CHECK(q5->from_integer(-3).coord_strings() == std::vector<std::string>{"-3", "0"});
}

TEST_CASE("zero divisors reveal reducible defining polynomials") {
  // t^2 - 1 is not irreducible; inverting t - 1 must fail loudly.
  FieldPtr bad = NumberField::make(UniPoly::from_integers({-1, 0, 1}));
  FieldElement a = bad->from_coords({Rational(-1), Rational(1)});
  CHECK_THROWS_AS(a.inverse(), std::invalid_argument);
}

#include "numgroup/number_field.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "numgroup/detail/qlinalg.hpp"
#include "numgroup/field_element.hpp"

namespace numgroup {

namespace {

bool is_squarefree(long d) {
  long a = std::labs(d);
  for (long p = 2; p * p <= a; ++p) {
    if (a % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace

NumberField::NumberField(UniPoly poly, std::vector<std::vector<Rational>> basis,
                         std::optional<std::complex<double>> embedding)
    : poly_(std::move(poly)),
      degree_(poly_.degree()),
      basis_(std::move(basis)),
      embedding_(embedding) {
  auto inv = detail::qmat_inverse(basis_);
  if (!inv) throw std::invalid_argument("integral basis is singular");
  basis_inv_ = std::move(*inv);
  is_real_ = embedding_.has_value() && embedding_->imag() == 0.0;
}

std::complex<double> NumberField::embedding() const {
  if (!embedding_) throw std::logic_error("field has no pinned embedding");
  return *embedding_;
}

FieldPtr NumberField::rationals() {
  static FieldPtr q = make(UniPoly::variable(), std::vector<std::vector<Rational>>{{Rational(1)}},
                           std::complex<double>(0.0, 0.0));
  return q;
}

FieldPtr NumberField::quadratic(long d) {
  if (d == 0 || d == 1) throw std::invalid_argument("quadratic field needs d != 0, 1");
  if (!is_squarefree(d)) throw std::invalid_argument("quadratic field needs squarefree d");
  UniPoly f = UniPoly::from_integers({-d, 0, 1});
  std::vector<std::vector<Rational>> basis;
  const bool one_mod_four = ((d % 4) + 4) % 4 == 1;
  if (one_mod_four) {
    basis = {{Rational(1), Rational(0)}, {Rational(1, 2), Rational(1, 2)}};
  } else {
    basis = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  }
  std::complex<double> root =
      d > 0 ? std::complex<double>(std::sqrt(static_cast<double>(d)), 0.0)
            : std::complex<double>(0.0, std::sqrt(static_cast<double>(-d)));
  return make(std::move(f), std::move(basis), root);
}

FieldPtr NumberField::make(UniPoly defining_poly,
                           std::optional<std::vector<std::vector<Rational>>> integral_basis,
                           std::optional<std::complex<double>> embedding) {
  if (defining_poly.degree() < 1)
    throw std::invalid_argument("defining polynomial must have degree >= 1");
  if (!defining_poly.is_monic())
    throw std::invalid_argument("defining polynomial must be monic");
  if (!defining_poly.has_integer_coeffs())
    throw std::invalid_argument("defining polynomial must have integer coefficients");
  const size_t d = static_cast<size_t>(defining_poly.degree());

  std::vector<std::vector<Rational>> basis;
  if (integral_basis) {
    basis = std::move(*integral_basis);
    if (basis.size() != d)
      throw std::invalid_argument("integral basis must have one row per degree");
    for (const auto& row : basis)
      if (row.size() != d)
        throw std::invalid_argument("integral basis rows must have length equal to the degree");
  } else {
    basis.assign(d, std::vector<Rational>(d, Rational(0)));
    for (size_t i = 0; i < d; ++i) basis[i][i] = 1;
  }

  // Degree-1 fields are Q; the root is known exactly.
  if (d == 1 && !embedding) {
    double r = -defining_poly.coeff(0).get_d();
    embedding = std::complex<double>(r, 0.0);
  }

  auto field = FieldPtr(new NumberField(std::move(defining_poly), std::move(basis), embedding));
  field->validate();
  return field;
}

void NumberField::validate() const {
  // The basis must contain 1 as a row.
  bool has_one = false;
  for (const auto& row : basis_) {
    bool ok = row[0] == 1;
    for (size_t j = 1; j < row.size(); ++j) ok = ok && row[j] == 0;
    if (ok) {
      has_one = true;
      break;
    }
  }
  if (!has_one) throw std::invalid_argument("integral basis must contain 1");

  for (const auto& row : basis_) {
    FieldElement e(shared_from_this(), row);
    if (!e.is_algebraic_integer())
      throw std::invalid_argument("integral basis row " + e.to_string() +
                                  " is not an algebraic integer");
  }

  if (embedding_) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& r : approximate_roots(poly_)) best = std::min(best, std::abs(r - *embedding_));
    if (!(best < 1e-6))
      throw std::invalid_argument("embedding hint is not a root of the defining polynomial");
  }
}

bool NumberField::same_field(const NumberField& other) const {
  if (this == &other) return true;
  return poly_ == other.poly_ && basis_ == other.basis_;
}

FieldElement NumberField::zero() const { return from_rational(Rational(0)); }

FieldElement NumberField::one() const { return from_rational(Rational(1)); }

FieldElement NumberField::generator() const {
  std::vector<Rational> c(static_cast<size_t>(degree_), Rational(0));
  if (degree_ == 1) {
    // Q[t]/(t - c): the generator is the rational root itself.
    c[0] = -poly_.coeff(0);
  } else {
    c[1] = 1;
  }
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::from_integer(long k) const { return from_rational(Rational(k)); }

FieldElement NumberField::from_rational(const Rational& q) const {
  std::vector<Rational> c(static_cast<size_t>(degree_), Rational(0));
  c[0] = q;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::from_coords(std::vector<Rational> coords) const {
  return FieldElement(shared_from_this(), std::move(coords));
}

std::string NumberField::to_string() const {
  std::ostringstream os;
  os << "Q[t]/(" << poly_.to_string() << ")";
  return os.str();
}

std::vector<std::complex<double>> approximate_roots(const UniPoly& p) {
  const int n = p.degree();
  if (n < 1) return {};
  std::vector<std::complex<double>> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = p.coeff(k).get_d();
  for (auto& x : c) x /= c[static_cast<size_t>(n)];

  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc = 0;
    for (int k = n; k >= 0; --k) acc = acc * z + c[static_cast<size_t>(k)];
    return acc;
  };

  double radius = 0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[static_cast<size_t>(k)]));
  radius = 1.0 + radius;

  std::vector<std::complex<double>> z(static_cast<size_t>(n));
  const std::complex<double> seed(0.4, 0.9);  // standard non-symmetric start
  std::complex<double> w = 1.0;
  for (int k = 0; k < n; ++k) {
    w *= seed;
    z[static_cast<size_t>(k)] = radius * w;
  }
  for (int iter = 0; iter < 500; ++iter) {
    double moved = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> denom = 1.0;
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
      std::complex<double> step = eval(z[static_cast<size_t>(i)]) / denom;
      z[static_cast<size_t>(i)] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-13) break;
  }
  return z;
}

}  // namespace numgroup

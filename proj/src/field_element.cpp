#include "numgroup/field_element.hpp"

#include <sstream>
#include <stdexcept>

#include "numgroup/detail/qlinalg.hpp"

namespace numgroup {

namespace {

UniPoly to_poly(const std::vector<Rational>& coords) {
  return UniPoly(std::vector<Rational>(coords));
}

std::vector<Rational> from_poly(const UniPoly& p, size_t d) {
  std::vector<Rational> c(d, Rational(0));
  for (int k = 0; k <= p.degree(); ++k) c[static_cast<size_t>(k)] = p.coeff(k);
  return c;
}

}  // namespace

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw std::invalid_argument("field element needs a field");
  if (coords_.size() != static_cast<size_t>(field_->degree()))
    throw std::invalid_argument("coordinate count must equal the field degree");
  for (auto& c : coords_) c.canonicalize();
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field().get() == b.field().get()) return;
  if (!a.field()->same_field(*b.field()))
    throw std::invalid_argument("field mismatch between " + a.field()->to_string() + " and " +
                                b.field()->to_string());
}

bool FieldElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (coords_[0] != 1) return false;
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c(coords_);
  for (auto& x : c) x = -x;
  return FieldElement(field_, std::move(c));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  std::vector<Rational> c(a.coords_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  std::vector<Rational> c(a.coords_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  UniPoly prod = to_poly(a.coords_) * to_poly(b.coords_);
  UniPoly rem = prod.divmod(a.field_->defining_poly()).second;
  return FieldElement(a.field_, from_poly(rem, a.coords_.size()));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement& FieldElement::operator+=(const FieldElement& b) { return *this = *this + b; }
FieldElement& FieldElement::operator-=(const FieldElement& b) { return *this = *this - b; }
FieldElement& FieldElement::operator*=(const FieldElement& b) { return *this = *this * b; }

bool FieldElement::operator==(const FieldElement& o) const {
  require_same_field(*this, o);
  return coords_ == o.coords_;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero field element");
  auto ext = UniPoly::extended_gcd(to_poly(coords_), field_->defining_poly());
  if (ext.g.degree() != 0)
    throw std::invalid_argument(
        "defining polynomial is reducible: found zero divisor " + to_string());
  UniPoly inv = ext.s.divmod(field_->defining_poly()).second;
  return FieldElement(field_, from_poly(inv, coords_.size()));
}

UniPoly FieldElement::minimal_polynomial() const {
  const size_t d = coords_.size();
  detail::QMat powers;
  std::vector<Rational> one(d, Rational(0));
  one[0] = 1;
  powers.push_back(one);
  FieldElement p = field_->one();
  for (size_t k = 1; k <= d; ++k) {
    p = p * (*this);
    if (auto dep = detail::qmat_solve_left(powers, p.coords())) {
      std::vector<Rational> mc(k + 1, Rational(0));
      for (size_t i = 0; i < k; ++i) mc[i] = -(*dep)[i];
      mc[k] = 1;
      return UniPoly(std::move(mc));
    }
    powers.push_back(p.coords());
  }
  throw std::logic_error("no linear dependence among element powers");
}

bool FieldElement::is_algebraic_integer() const {
  return minimal_polynomial().has_integer_coeffs();
}

std::vector<Rational> FieldElement::basis_coords() const {
  const auto& inv = field_->integral_basis_inverse();
  const size_t d = coords_.size();
  std::vector<Rational> y(d, Rational(0));
  for (size_t j = 0; j < d; ++j)
    for (size_t i = 0; i < d; ++i) y[j] += coords_[i] * inv[i][j];
  return y;
}

std::optional<std::vector<Rational>> FieldElement::integral_coords() const {
  auto y = basis_coords();
  for (const auto& c : y)
    if (!is_integer(c)) return std::nullopt;
  return y;
}

Rational FieldElement::norm() const {
  const size_t d = coords_.size();
  detail::QMat mult(d);
  FieldElement gen = field_->generator();
  FieldElement row = *this;
  for (size_t i = 0; i < d; ++i) {
    mult[i] = row.coords();
    if (i + 1 < d) row = row * gen;
  }
  return detail::qmat_det(std::move(mult));
}

std::optional<std::complex<double>> FieldElement::approx() const {
  if (!field_->has_embedding()) return std::nullopt;
  std::complex<double> t = field_->embedding();
  std::complex<double> acc = 0;
  for (auto it = coords_.rbegin(); it != coords_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

std::string FieldElement::to_string() const {
  if (field_->degree() == 1) return coords_[0].get_str();
  return to_poly(coords_).to_string();
}

std::vector<std::string> FieldElement::coord_strings() const {
  std::vector<std::string> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.get_str());
  return out;
}

FieldElement eval(const UniPoly& p, const FieldElement& x) {
  FieldElement acc = x.field()->zero();
  for (int k = p.degree(); k >= 0; --k) acc = acc * x + x.field()->from_rational(p.coeff(k));
  return acc;
}

}  // namespace numgroup

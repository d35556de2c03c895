#include "numgroup/euclidean_ring.hpp"

#include <array>
#include <stdexcept>

namespace numgroup {

namespace {

constexpr std::array<long, 9> kSupportedQuadratic = {-11, -7, -3, -2, -1, 2, 3, 5, 13};

// The canonical quadratic presentation produced by NumberField::quadratic.
std::optional<long> canonical_quadratic_d(const NumberField& f) {
  if (f.degree() != 2) return std::nullopt;
  const UniPoly& p = f.defining_poly();
  if (p.coeff(1) != 0) return std::nullopt;
  Rational md = -p.coeff(0);
  if (!is_integer(md) || !md.get_num().fits_slong_p()) return std::nullopt;
  long d = md.get_num().get_si();
  const auto& basis = f.integral_basis();
  const bool one_mod_four = ((d % 4) + 4) % 4 == 1;
  std::vector<std::vector<Rational>> expect;
  if (one_mod_four)
    expect = {{Rational(1), Rational(0)}, {Rational(1, 2), Rational(1, 2)}};
  else
    expect = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  if (basis != expect) return std::nullopt;
  return d;
}

}  // namespace

EuclideanOK::EuclideanOK(FieldPtr field, long quad_d)
    : field_(std::move(field)), quad_d_(quad_d) {
  FieldElement one = field_->one();
  units_ = {one, -one};
  if (quad_d_ == -1) {
    FieldElement i = field_->generator();
    units_ = {one, i, -one, -i};
  } else if (quad_d_ == -3) {
    // Sixth roots of unity; w = (1+sqrt(-3))/2 in power coordinates.
    FieldElement w = field_->from_coords({Rational(1, 2), Rational(1, 2)});
    FieldElement w2 = w * w;
    units_ = {one, w, w2, -one, -w, -w2};
  }
}

std::optional<EuclideanOK> EuclideanOK::for_field(const FieldPtr& field) {
  if (field->degree() == 1) return EuclideanOK(field, 0);
  if (auto d = canonical_quadratic_d(*field)) {
    for (long s : kSupportedQuadratic)
      if (s == *d) return EuclideanOK(field, *d);
  }
  return std::nullopt;
}

std::string EuclideanOK::ring_name() const {
  if (quad_d_ == 0) return "Z";
  if (quad_d_ == -1) return "Z[i]";
  const bool one_mod_four = ((quad_d_ % 4) + 4) % 4 == 1;
  std::string root = "sqrt(" + std::to_string(quad_d_) + ")";
  return one_mod_four ? "Z[(1+" + root + ")/2]" : "Z[" + root + "]";
}

Rational EuclideanOK::abs_norm(const FieldElement& a) const { return abs(a.norm()); }

EuclideanOK::DivResult EuclideanOK::euclid_div(const FieldElement& a,
                                               const FieldElement& b) const {
  if (b.is_zero()) throw std::domain_error("euclidean division by zero");
  FieldElement x = a / b;
  std::vector<Rational> c = x.basis_coords();
  const size_t d = c.size();
  const auto& basis = field_->integral_basis();

  auto basis_element = [&](const std::vector<Integer>& q) {
    std::vector<Rational> coords(d, Rational(0));
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) coords[j] += Rational(q[i]) * basis[i][j];
    return field_->from_coords(std::move(coords));
  };

  std::vector<Integer> base(d);
  for (size_t i = 0; i < d; ++i) base[i] = rational_floor(c[i]);

  // All offsets in {-2..2}^d; deterministic tie-break on the remainder's
  // power-basis coordinates.
  std::optional<DivResult> best;
  std::optional<Rational> best_norm;
  std::vector<long> off(d, -2);
  while (true) {
    std::vector<Integer> q(d);
    for (size_t i = 0; i < d; ++i) q[i] = base[i] + off[i];
    FieldElement qe = basis_element(q);
    FieldElement r = a - qe * b;
    Rational nr = abs_norm(r);
    bool better = !best.has_value() || nr < *best_norm ||
                  (nr == *best_norm && r.coords() < best->remainder.coords());
    if (better) {
      best = DivResult{qe, r};
      best_norm = nr;
    }
    size_t k = 0;
    while (k < d && off[k] == 2) {
      off[k] = -2;
      ++k;
    }
    if (k == d) break;
    ++off[k];
  }
  if (!(*best_norm < abs_norm(b)))
    throw std::logic_error("euclidean division failed to decrease the norm");
  return *best;
}

EuclideanOK::DivResult EuclideanOK::canonical_rem(const FieldElement& a,
                                                  const FieldElement& p) const {
  if (p.is_zero()) throw std::domain_error("reduction modulo zero");
  FieldElement x = a / p;
  std::vector<Rational> c = x.basis_coords();
  const size_t d = c.size();
  const auto& basis = field_->integral_basis();
  std::vector<Rational> coords(d, Rational(0));
  for (size_t i = 0; i < d; ++i) {
    Rational f(rational_floor(c[i]));
    for (size_t j = 0; j < d; ++j) coords[j] += f * basis[i][j];
  }
  FieldElement q = field_->from_coords(std::move(coords));
  return {q, a - q * p};
}

FieldElement EuclideanOK::canonical_associate(const FieldElement& p) const {
  if (p.is_zero()) return p;
  if (quad_d_ == -1) {
    for (const auto& u : units_) {
      FieldElement cand = u * p;
      const auto& c = cand.coords();
      if (c[0] > 0 && c[1] >= 0) return cand;
    }
    throw std::logic_error("no first-quadrant associate found");
  }
  std::optional<FieldElement> best;
  std::optional<std::vector<Rational>> best_key;
  for (const auto& u : units_) {
    FieldElement cand = u * p;
    std::vector<Rational> ic = cand.basis_coords();
    size_t lead = 0;
    while (lead < ic.size() && ic[lead] == 0) ++lead;
    if (lead == ic.size() || ic[lead] < 0) continue;
    if (!best || ic > *best_key) {
      best = cand;
      best_key = std::move(ic);
    }
  }
  if (!best) throw std::logic_error("no sign-normalized associate found");
  return *best;
}

}  // namespace numgroup

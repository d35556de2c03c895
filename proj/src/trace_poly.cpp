#include "numgroup/trace_poly.hpp"

#include <algorithm>
#include <sstream>

namespace numgroup {

void TracePoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

TracePoly TracePoly::constant(long c) { return constant(Integer(c)); }

TracePoly TracePoly::constant(const Integer& c) { return monomial({0, 0, 0}, c); }

TracePoly TracePoly::x() { return monomial({1, 0, 0}, 1); }
TracePoly TracePoly::y() { return monomial({0, 1, 0}, 1); }
TracePoly TracePoly::z() { return monomial({0, 0, 1}, 1); }

TracePoly TracePoly::monomial(const Exponents& e, const Integer& c) {
  TracePoly p;
  if (c != 0) p.terms_[e] = c;
  return p;
}

TracePoly TracePoly::operator-() const {
  TracePoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

TracePoly operator+(const TracePoly& a, const TracePoly& b) {
  TracePoly out = a;
  for (const auto& [e, c] : b.terms_) out.terms_[e] += c;
  out.prune();
  return out;
}

TracePoly operator-(const TracePoly& a, const TracePoly& b) { return a + (-b); }

TracePoly operator*(const TracePoly& a, const TracePoly& b) {
  TracePoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      TracePoly::Exponents e = {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      out.terms_[e] += ca * cb;
    }
  out.prune();
  return out;
}

FieldElement TracePoly::eval(const FieldElement& x, const FieldElement& y,
                             const FieldElement& z) const {
  const FieldPtr& field = x.field();
  auto power = [&](const FieldElement& base, int e) {
    FieldElement acc = field->one();
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
  };
  FieldElement acc = field->zero();
  for (const auto& [e, c] : terms_) {
    FieldElement term = field->from_rational(Rational(c));
    if (e[0]) term *= power(x, e[0]);
    if (e[1]) term *= power(y, e[1]);
    if (e[2]) term *= power(z, e[2]);
    acc += term;
  }
  return acc;
}

std::vector<std::pair<TracePoly::Exponents, Integer>> TracePoly::entries() const {
  return {terms_.begin(), terms_.end()};
}

std::string TracePoly::to_string() const {
  if (terms_.empty()) return "0";
  // Highest total degree first for readability.
  std::vector<std::pair<Exponents, Integer>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int da = a.first[0] + a.first[1] + a.first[2];
    int db = b.first[0] + b.first[1] + b.first[2];
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  const char* names[3] = {"x", "y", "z"};
  for (const auto& [e, c] : sorted) {
    Integer a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_var = e[0] || e[1] || e[2];
    if (!has_var || a != 1) os << a.get_str();
    for (int k = 0; k < 3; ++k) {
      if (!e[k]) continue;
      os << names[k];
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  return os.str();
}

}  // namespace numgroup

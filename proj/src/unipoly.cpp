#include "numgroup/unipoly.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace numgroup {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

void UniPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::variable() { return UniPoly({Rational(0), Rational(1)}); }

UniPoly UniPoly::from_integers(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long k : coeffs) c.emplace_back(k);
  return UniPoly(std::move(c));
}

bool UniPoly::has_integer_coeffs() const {
  for (const auto& c : c_)
    if (!is_integer(c)) return false;
  return true;
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(k)];
}

Rational UniPoly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return (Rational(1) / leading()) * (*this);
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> c(c_);
  for (auto& x : c) x = -x;
  return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
  std::vector<Rational> out(p.c_);
  for (auto& x : out) x *= c;
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(c_);
  int dr = static_cast<int>(rem.size()) - 1;
  const int dd = divisor.degree();
  if (dr < dd) return {UniPoly(), *this};
  std::vector<Rational> quo(static_cast<size_t>(dr - dd + 1), Rational(0));
  const Rational lead = divisor.leading();
  for (int k = dr; k >= dd; --k) {
    Rational q = rem[static_cast<size_t>(k)] / lead;
    if (q == 0) continue;
    quo[static_cast<size_t>(k - dd)] = q;
    for (int i = 0; i <= dd; ++i)
      rem[static_cast<size_t>(k - dd + i)] -= q * divisor.c_[static_cast<size_t>(i)];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyExtGcd UniPoly::extended_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(1), s1;
  UniPoly t0, t1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational scale = Rational(1) / r0.leading();
  return {scale * r0, scale * s0, scale * t0};
}

UniPoly UniPoly::cyclotomic(unsigned n) {
  if (n == 0) throw std::domain_error("cyclotomic index must be positive");
  static std::map<unsigned, UniPoly> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // x^n - 1 divided by the cyclotomics of all proper divisors.
  std::vector<Rational> xn(n + 1, Rational(0));
  xn[0] = -1;
  xn[n] = 1;
  UniPoly phi(std::move(xn));
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = phi.divmod(cyclotomic(d));
    if (!r.is_zero()) throw std::logic_error("cyclotomic division not exact");
    phi = std::move(q);
  }
  cache[n] = phi;
  return phi;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<size_t>(k)];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || a != 1) os << a.get_str();
    if (k > 0) {
      if (a != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace numgroup

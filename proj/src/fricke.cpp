#include "numgroup/fricke.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace numgroup {

GroupSpec pi_lambda(const FieldPtr& field, const FieldElement& lam) {
  if (!lam.field()->same_field(*field)) throw std::invalid_argument("lambda field mismatch");
  FieldElement zero = field->zero(), one = field->one();
  SquareMatrix a(field, 2, {zero, -one, one, zero});
  SquareMatrix b(field, 2, {one, lam, zero, one});
  return GroupSpec(field, 2, {a, b}, {"A", "B"});
}

namespace {

using Letters = std::vector<int>;

Letters cyclic_reduce(Letters w) {
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

Letters rotate_to_end(const Letters& w, size_t pos) {
  // Rotation that puts index pos at the last position.
  Letters out;
  out.reserve(w.size());
  for (size_t k = 1; k <= w.size(); ++k) out.push_back(w[(pos + k) % w.size()]);
  return out;
}

Letters inverse_of(const Letters& w) {
  Letters out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

// Traces are invariant under cyclic permutation and inversion; the memo key
// is the lexicographically least rotation of the word or its inverse.
Letters canonical_key(const Letters& w) {
  if (w.empty()) return w;
  Letters best = w;
  Letters inv = inverse_of(w);
  for (const Letters* cand : std::initializer_list<const Letters*>{&w, &inv}) {
    for (size_t s = 0; s < cand->size(); ++s) {
      Letters rot;
      rot.reserve(cand->size());
      for (size_t k = 0; k < cand->size(); ++k) rot.push_back((*cand)[(s + k) % cand->size()]);
      if (rot < best) best = std::move(rot);
    }
  }
  return best;
}

class WordTraceComputer {
 public:
  TracePoly compute(const Letters& raw) {
    Letters w = cyclic_reduce(Word(raw).letters());
    return trace(w);
  }

 private:
  TracePoly trace_letter(int l) {
    return std::abs(l) == 1 ? TracePoly::x() : TracePoly::y();
  }

  TracePoly trace(Letters w) {
    w = cyclic_reduce(Word(w).letters());
    if (w.empty()) return TracePoly::constant(2);
    if (w.size() == 1) return trace_letter(w[0]);
    Letters key = canonical_key(w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    TracePoly result = reduce_step(key);
    memo_[key] = result;
    return result;
  }

  TracePoly reduce_step(const Letters& w) {
    const size_t len = w.size();

    // Inverse elimination: pivot on the last inverse letter. With the word
    // rotated to end in l^-1: tr(W l^-1) = tr(W) tr(l) - tr(W l).
    for (size_t k = len; k-- > 0;) {
      if (w[k] < 0) {
        Letters rot = rotate_to_end(w, k);
        Letters prefix(rot.begin(), rot.end() - 1);
        Letters extended = prefix;
        extended.push_back(-rot.back());
        return trace(prefix) * trace_letter(rot.back()) - trace(extended);
      }
    }

    // Square reduction: pivot on the last doubled letter (cyclically). With
    // the word rotated to end in l l: tr(W l l) = tr(W l) tr(l) - tr(W).
    for (size_t k = len; k-- > 0;) {
      if (w[k] == w[(k + 1) % len]) {
        Letters rot = rotate_to_end(w, (k + 1) % len);
        Letters with_one(rot.begin(), rot.end() - 1);
        Letters without(with_one.begin(), with_one.end() - 1);
        return trace(with_one) * trace_letter(rot.back()) - trace(without);
      }
    }

    // Positive, squarefree, cyclically reduced over two letters: an
    // alternating word (AB)^k. tr((AB)^k) = z tr((AB)^{k-1}) - tr((AB)^{k-2}).
    if (len % 2 != 0) throw std::logic_error("unexpected odd alternating word");
    const size_t k = len / 2;
    if (k == 1) return TracePoly::z();
    Letters shorter(w.begin(), w.end() - 2);
    Letters shortest(w.begin(), w.end() - 4);
    return TracePoly::z() * trace(shorter) - trace(shortest);
  }

  std::map<Letters, TracePoly> memo_;
};

}  // namespace

TracePoly word_trace_poly(const Word& word) {
  for (int l : word.letters())
    if (std::abs(l) > 2)
      throw std::invalid_argument("trace polynomials are implemented for two generators only");
  WordTraceComputer computer;
  return computer.compute(word.letters());
}

FieldElement eval_trace_poly(const TracePoly& p, const GroupSpec& spec) {
  if (spec.generators.size() != 2)
    throw std::invalid_argument("trace polynomial evaluation needs exactly two generators");
  for (const auto& g : spec.generators)
    if (!g.det().is_one())
      throw std::invalid_argument("trace polynomial evaluation needs determinant-one generators");
  const SquareMatrix& a = spec.generators[0];
  const SquareMatrix& b = spec.generators[1];
  return p.eval(a.trace(), b.trace(), (a * b).trace());
}

namespace {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

long squarefree_part(long n, long& square_root_out) {
  long sf = 1, sq = 1;
  long m = n < 0 ? -n : n;
  for (long p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) sq *= p;
    if (e % 2) sf *= p;
  }
  sf *= m;
  if (n < 0) sf = -sf;
  square_root_out = sq;
  return sf;
}

}  // namespace

HeckeValue hecke_value(int q) {
  if (q < 3) throw std::invalid_argument("Hecke value needs q >= 3");

  // 2cos(pi/q) = zeta + zeta^-1 for zeta a primitive 2q-th root of unity;
  // compute its minimal polynomial inside Q[t]/Phi_2q.
  const unsigned n2q = 2 * static_cast<unsigned>(q);
  UniPoly phi = UniPoly::cyclotomic(n2q);
  FieldPtr cyclo = NumberField::make(phi, std::nullopt,
                                     std::complex<double>(std::cos(M_PI / q), std::sin(M_PI / q)));
  FieldElement zeta = cyclo->generator();
  FieldElement value = zeta + zeta.inverse();
  UniPoly minpoly = value.minimal_polynomial();

  if (!minpoly.has_integer_coeffs())
    throw std::logic_error("2cos(pi/q) minimal polynomial is not integral");
  if (minpoly.degree() != static_cast<int>(euler_phi(n2q) / 2))
    throw std::logic_error("2cos(pi/q) minimal polynomial has unexpected degree");

  const double target = 2.0 * std::cos(M_PI / q);

  if (minpoly.degree() == 1) {
    // Rational value (q = 3 gives lambda = 1).
    Rational lam = -minpoly.coeff(0);
    FieldPtr field = NumberField::rationals();
    HeckeValue out{q, field, field->from_rational(lam)};
    if (!out.lambda.is_algebraic_integer()) throw std::logic_error("lambda must be integral");
    return out;
  }

  if (minpoly.degree() == 2) {
    // Re-present over the canonical quadratic field so the Euclidean O_K
    // machinery recognizes it: lambda = (-p +/- s sqrt(d))/2 for
    // t^2 + p t + c with discriminant p^2 - 4c = s^2 d.
    long p = minpoly.coeff(1).get_num().get_si();
    long c = minpoly.coeff(0).get_num().get_si();
    long disc = p * p - 4 * c;
    long s = 1;
    long d = squarefree_part(disc, s);
    FieldPtr field = NumberField::quadratic(d);
    for (int sign : {+1, -1}) {
      FieldElement lam = field->from_coords(
          {Rational(-p, 2), Rational(sign * s, 2)});
      if (!eval(minpoly, lam).is_zero()) continue;
      auto ax = lam.approx();
      if (ax && std::abs(ax->real() - target) < 1e-9 && std::abs(ax->imag()) < 1e-9) {
        if (!lam.is_algebraic_integer()) throw std::logic_error("lambda must be integral");
        return HeckeValue{q, field, lam};
      }
    }
    throw std::logic_error("no quadratic embedding matches 2cos(pi/q)");
  }

  // Higher degree: the power basis generates the full ring of integers for
  // these real cyclotomic subfields.
  FieldPtr field = NumberField::make(minpoly, std::nullopt, std::complex<double>(target, 0.0));
  HeckeValue out{q, field, field->generator()};
  if (!out.lambda.is_algebraic_integer()) throw std::logic_error("lambda must be integral");
  return out;
}

}  // namespace numgroup

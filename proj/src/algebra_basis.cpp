#include "numgroup/algebra_basis.hpp"

#include <stdexcept>
#include <unordered_set>

namespace numgroup {

namespace {

// Row-echelon tracker for exact rank updates over K, first-nonzero pivot,
// pivot rows normalized to 1.
class EchelonSpan {
 public:
  // Reduces v against the stored rows; if a nonzero residue remains it is
  // inserted as a new pivot row and true is returned.
  bool try_insert(std::vector<FieldElement> v) {
    reduce(v);
    size_t piv = first_nonzero(v);
    if (piv == v.size()) return false;
    FieldElement inv = v[piv].inverse();
    for (auto& x : v) x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  bool contains(std::vector<FieldElement> v) const {
    reduce(v);
    return first_nonzero(v) == v.size();
  }

 private:
  void reduce(std::vector<FieldElement>& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const FieldElement& c = v[pivots_[r]];
      if (c.is_zero()) continue;
      FieldElement f = c;
      for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows_[r][j];
    }
  }

  static size_t first_nonzero(const std::vector<FieldElement>& v) {
    size_t i = 0;
    while (i < v.size() && v[i].is_zero()) ++i;
    return i;
  }

  std::vector<std::vector<FieldElement>> rows_;
  std::vector<size_t> pivots_;
};

}  // namespace

AlgebraBasis algebra_basis(const std::vector<SquareMatrix>& generators) {
  if (generators.empty()) throw std::invalid_argument("need at least one generator");
  const FieldPtr field = generators[0].field();
  const int n = generators[0].n();

  std::vector<SquareMatrix> letters;  // g_1..g_m, then inverses in the same order
  for (const auto& g : generators) {
    if (g.n() != n) throw std::invalid_argument("generator dimensions differ");
    letters.push_back(g);
  }
  for (const auto& g : generators) letters.push_back(g.inverse());
  const size_t m = generators.size();

  AlgebraBasis basis(field, n);

  EchelonSpan span;
  std::unordered_set<std::string> seen;

  SquareMatrix id = SquareMatrix::identity(field, n);
  span.try_insert(id.vectorized());
  seen.insert(id.key());
  basis.words.push_back(Word::identity());
  basis.matrices.push_back(id);

  // The span is multiplication-closed once every basis element times every
  // letter stays inside it, so only basis elements need expanding.
  for (size_t i = 0; i < basis.matrices.size(); ++i) {
    for (size_t l = 0; l < letters.size(); ++l) {
      int letter = l < m ? static_cast<int>(l) + 1 : -(static_cast<int>(l - m) + 1);
      SquareMatrix prod = basis.matrices[i] * letters[l];
      if (!seen.insert(prod.key()).second) continue;
      if (span.try_insert(prod.vectorized())) {
        basis.words.push_back(basis.words[i].appended(letter));
        basis.matrices.push_back(std::move(prod));
      }
    }
  }

  basis.gram = gram_matrix(basis);
  return basis;
}

SquareMatrix gram_matrix(const AlgebraBasis& basis) {
  const int r = basis.dimension();
  SquareMatrix gram(basis.field, r);
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      FieldElement t = trace_product(basis.matrices[static_cast<size_t>(i)],
                                     basis.matrices[static_cast<size_t>(j)]);
      gram.at(i, j) = t;
      gram.at(j, i) = t;
    }
  return gram;
}

bool is_completely_reducible(const AlgebraBasis& basis) { return !basis.gram.det().is_zero(); }

std::vector<SquareMatrix> dual_basis(const AlgebraBasis& basis) {
  if (!is_completely_reducible(basis))
    throw std::domain_error("trace form is degenerate: no dual basis");
  const int r = basis.dimension();
  SquareMatrix ginv = basis.gram.inverse();
  std::vector<SquareMatrix> dual;
  dual.reserve(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) {
    SquareMatrix d(basis.field, basis.n);
    for (int j = 0; j < r; ++j)
      d = d + basis.matrices[static_cast<size_t>(j)].scaled(ginv.at(i, j));
    dual.push_back(std::move(d));
  }
  // T(dual_i, b_j) = delta_ij, checked exactly.
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      FieldElement t = trace_product(dual[static_cast<size_t>(i)],
                                     basis.matrices[static_cast<size_t>(j)]);
      bool ok = (i == j) ? t.is_one() : t.is_zero();
      if (!ok) throw std::logic_error("dual basis pairing check failed");
    }
  return dual;
}

bool in_span(const std::vector<SquareMatrix>& span, const SquareMatrix& m) {
  EchelonSpan es;
  for (const auto& b : span) es.try_insert(b.vectorized());
  return es.contains(m.vectorized());
}

}  // namespace numgroup

#pragma once

#include <optional>
#include <vector>

#include "numgroup/square_matrix.hpp"
#include "numgroup/word.hpp"

namespace numgroup {

/// K-basis of the linear hull of the group generated by a set of invertible
/// matrices: basis words and matrices (b_1 = identity), the Gram matrix of
/// the trace form tr(b_i b_j), and optionally the dual basis with respect to
/// that form.
struct AlgebraBasis {
  AlgebraBasis(FieldPtr field_, int n_) : field(std::move(field_)), n(n_), gram(field, 1) {}

  FieldPtr field;
  int n = 0;
  std::vector<Word> words;
  std::vector<SquareMatrix> matrices;
  SquareMatrix gram;  // r x r over the field

  int dimension() const { return static_cast<int>(matrices.size()); }
};

/// Breadth-first closure of the span of {Id, generators, inverses} under
/// right multiplication by generators and inverses; rank growth is tested by
/// exact elimination on the n^2 vectorized coordinates. Deterministic: words
/// are explored by length, generators before inverses.
AlgebraBasis algebra_basis(const std::vector<SquareMatrix>& generators);

/// Gram matrix of the trace form on the basis, gram[i][j] = tr(b_i b_j).
SquareMatrix gram_matrix(const AlgebraBasis& basis);

/// Nondegeneracy of the trace form on the linear hull, det(gram) != 0.
bool is_completely_reducible(const AlgebraBasis& basis);

/// Dual basis with respect to the trace form: tr(dual_i * b_j) = delta_ij,
/// verified exactly. Throws std::domain_error when the form is degenerate.
std::vector<SquareMatrix> dual_basis(const AlgebraBasis& basis);

/// Exact span membership of a matrix in the K-span of a matrix list.
bool in_span(const std::vector<SquareMatrix>& span, const SquareMatrix& m);

}  // namespace numgroup

#pragma once

#include <optional>
#include <vector>

#include "numgroup/euclidean_ring.hpp"
#include "numgroup/square_matrix.hpp"

namespace numgroup {

/// Finitely generated O_K-submodule of K^n. Stored as a positive integer
/// denominator D and the Hermite normal form of the scaled generators: rows
/// are vectors over O_K (their O_K-span equals the span of D*gens), echelon
/// with canonical pivots, no zero rows.
struct OKModule {
  FieldPtr field;
  int n = 0;
  Integer denom = 1;
  std::vector<std::vector<FieldElement>> hnf;   // rows over O_K
  std::vector<std::vector<FieldElement>> gens;  // original vectors in K^n

  /// HNF rows rescaled back to K^n (row / denom).
  std::vector<std::vector<FieldElement>> basis_vectors() const;
};

/// Row Hermite normal form over a Euclidean O_K: gcd cascade by
/// norm-decreasing division per column, canonical unit pivots, entries above
/// a pivot reduced to canonical coset representatives. Exact, deterministic,
/// idempotent; preserves the O_K-row-span.
std::vector<std::vector<FieldElement>> hnf_reduce(
    std::vector<std::vector<FieldElement>> rows, const EuclideanOK& ring);

/// Builds a module from arbitrary vectors in K^n: common denominator, scale,
/// reduce. The denominator is minimized by cancelling rational integer
/// content.
OKModule module_from_vectors(std::vector<std::vector<FieldElement>> vectors,
                             const EuclideanOK& ring);

/// O_K^n with the standard basis.
OKModule standard_lattice(const FieldPtr& field, int n, const EuclideanOK& ring);

/// O_K-coefficients of v against the module's HNF rows when v is a member;
/// nullopt otherwise. Exact divisibility is checked in K via integral
/// coordinates.
std::optional<std::vector<FieldElement>> membership(const std::vector<FieldElement>& v,
                                                    const OKModule& m,
                                                    const EuclideanOK& ring);

struct ClosureOutcome {
  bool stabilized = false;
  int rounds = 0;  // rounds that enlarged the module
  std::vector<Integer> denom_history;
  std::vector<int> row_history;
  OKModule module;  // the invariant module when stabilized, else the last one
};

/// Iterated G-saturation of the standard lattice: each round adjoins g*v and
/// g^{-1}*v for every generator g and current basis vector v, then
/// re-reduces. Stops when a round adds nothing (the module is invariant) or
/// after max_rounds (divergence report with growth statistics).
ClosureOutcome lattice_closure(const std::vector<SquareMatrix>& generators,
                               const EuclideanOK& ring, int max_rounds = 16);

/// Conjugator whose columns are the module's basis vectors. Requires a
/// full-rank HNF with exactly n rows.
SquareMatrix extract_basis(const OKModule& m);

/// U^{-1} g U for every generator, verifying integral entries, unit
/// determinant and exact trace preservation. Any failure throws.
std::vector<SquareMatrix> conjugate_and_verify(const SquareMatrix& u,
                                               const std::vector<SquareMatrix>& generators);

}  // namespace numgroup

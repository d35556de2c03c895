#pragma once

#include <string>
#include <vector>

#include "numgroup/field_element.hpp"

namespace numgroup {

/// Dense n x n matrix over a number field, exact entries, value semantics.
class SquareMatrix {
 public:
  SquareMatrix(FieldPtr field, int n);  // zero matrix
  SquareMatrix(FieldPtr field, int n, std::vector<FieldElement> entries);  // row-major
  static SquareMatrix identity(const FieldPtr& field, int n);

  int n() const { return n_; }
  const FieldPtr& field() const { return field_; }
  const FieldElement& at(int i, int j) const;
  FieldElement& at(int i, int j);

  friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b);
  friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b);
  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  bool operator==(const SquareMatrix& o) const;

  SquareMatrix scaled(const FieldElement& c) const;
  FieldElement trace() const;
  FieldElement det() const;
  /// Exact Gauss-Jordan with first-nonzero pivot; throws on singular input.
  SquareMatrix inverse() const;
  bool is_identity() const;

  /// Matrix times column vector.
  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

  /// Flattened coordinates (row-major), used as exact span coordinates.
  std::vector<FieldElement> vectorized() const { return e_; }

  /// Canonical textual key for exact deduplication.
  std::string key() const;
  std::string to_string() const;

 private:
  void check_index(int i, int j) const;
  FieldPtr field_;
  int n_;
  std::vector<FieldElement> e_;
};

/// tr(A*B) without forming the product.
FieldElement trace_product(const SquareMatrix& a, const SquareMatrix& b);

}  // namespace numgroup

#pragma once

#include <string>
#include <vector>

#include "numgroup/square_matrix.hpp"
#include "numgroup/word.hpp"

namespace numgroup {

/// A finitely generated matrix group: invertible generators over one number
/// field, with display labels. Generator inverses are precomputed at
/// construction (which also validates invertibility).
struct GroupSpec {
  GroupSpec(FieldPtr field_, int n_, std::vector<SquareMatrix> generators_,
            std::vector<std::string> labels_ = {});

  FieldPtr field;
  int n;
  std::vector<SquareMatrix> generators;
  std::vector<std::string> labels;
  std::vector<SquareMatrix> inverses;

  /// Matrix of a word in the generators.
  SquareMatrix word_matrix(const Word& w) const;
};

}  // namespace numgroup

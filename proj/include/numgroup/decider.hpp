#pragma once

#include <optional>
#include <string>
#include <utility>

#include "numgroup/algebra_basis.hpp"
#include "numgroup/group_spec.hpp"
#include "numgroup/ok_module.hpp"
#include "numgroup/unipoly.hpp"

namespace numgroup {

enum class VerdictKind { Numerical, NotNumerical, Inconclusive };
enum class Realness { Real, Complex };

/// Outcome of the certification pipeline. A Numerical verdict always
/// carries a conjugator that passed conjugate_and_verify; a NotNumerical
/// verdict always carries a word whose trace is not an algebraic integer.
struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  bool completely_reducible = false;  // trace form nondegenerate on the hull
  int algebra_dimension = 0;
  std::optional<FieldElement> gram_det;
  Realness realness = Realness::Complex;
  std::string realness_warning;  // set when the field has no pinned embedding

  // Numerical
  std::optional<SquareMatrix> conjugator;
  std::vector<SquareMatrix> conjugated_generators;

  // NotNumerical
  std::optional<Word> witness_word;
  std::optional<FieldElement> witness_trace;
  std::optional<UniPoly> witness_minpoly;

  // Inconclusive
  std::string reason;

  // Construction-phase statistics (empty when the witness search ends early).
  bool closure_ran = false;
  bool closure_stabilized = false;
  int closure_rounds = 0;
  std::vector<Integer> closure_denoms;
  int witness_search_len = 0;
};

struct CertifyOptions {
  int max_word_len = 8;
  int max_rounds = 16;
};

/// Breadth-first search over reduced words (deduplicated by exact matrix
/// value) for one whose trace is not an algebraic integer. A witness proves
/// the group is not numerical; absence of one proves nothing by itself.
std::optional<std::pair<Word, FieldElement>> trace_witness_search(const GroupSpec& spec,
                                                                  int max_len);

/// Full pipeline: trace-form guard, trace refutation, then constructive
/// certification by lattice closure when the ring is supported. Never
/// returns Numerical without a verified conjugator.
Verdict certify(const GroupSpec& spec, const CertifyOptions& options = {});

/// Realness of the group's field under its pinned embedding; Complex (with
/// a warning recorded by certify) when no embedding is pinned.
Realness classify_realness(const GroupSpec& spec);

}  // namespace numgroup

#pragma once

#include "numgroup/group_spec.hpp"
#include "numgroup/trace_poly.hpp"
#include "numgroup/word.hpp"

namespace numgroup {

/// The two-generator group with A = [[0,-1],[1,0]] and B = [[1,lam],[0,1]].
GroupSpec pi_lambda(const FieldPtr& field, const FieldElement& lam);

/// Trace of a word in two SL(2) generators as a polynomial in
/// (x, y, z) = (tr A, tr B, tr AB), computed by the trace identities
/// tr(UV) + tr(UV^-1) = tr(U) tr(V), tr(U^-1) = tr(U), tr cyclic,
/// tr(Id) = 2, with memoization on cyclically normalized words. Words over
/// three or more generators are rejected.
TracePoly word_trace_poly(const Word& word);

/// Substitutes x = tr(A), y = tr(B), z = tr(AB) from a two-generator
/// determinant-one spec.
FieldElement eval_trace_poly(const TracePoly& p, const GroupSpec& spec);

/// lambda_q = 2 cos(pi/q) presented exactly: its minimal polynomial is
/// computed from the 2q-th cyclotomic field, and the value lives in Q for
/// q = 3, in a canonical quadratic field when the degree is 2, and in the
/// power-basis field of its minimal polynomial otherwise.
struct HeckeValue {
  int q;
  FieldPtr field;
  FieldElement lambda;
};

HeckeValue hecke_value(int q);

}  // namespace numgroup

#include "numgroup/decider.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace numgroup {

GroupSpec::GroupSpec(FieldPtr field_, int n_, std::vector<SquareMatrix> generators_,
                     std::vector<std::string> labels_)
    : field(std::move(field_)), n(n_), generators(std::move(generators_)),
      labels(std::move(labels_)) {
  if (generators.empty()) throw std::invalid_argument("group needs at least one generator");
  for (const auto& g : generators) {
    if (g.n() != n) throw std::invalid_argument("generator dimension mismatch");
    if (!g.field()->same_field(*field)) throw std::invalid_argument("generator field mismatch");
    inverses.push_back(g.inverse());
  }
  if (labels.empty()) {
    for (size_t i = 0; i < generators.size(); ++i)
      labels.push_back(std::string(1, static_cast<char>('A' + (i % 26))));
  }
  if (labels.size() != generators.size())
    throw std::invalid_argument("one label per generator required");
}

SquareMatrix GroupSpec::word_matrix(const Word& w) const {
  SquareMatrix m = SquareMatrix::identity(field, n);
  for (int l : w.letters()) {
    size_t idx = static_cast<size_t>((l > 0 ? l : -l) - 1);
    if (idx >= generators.size()) throw std::out_of_range("word letter outside generator range");
    m = m * (l > 0 ? generators[idx] : inverses[idx]);
  }
  return m;
}

std::optional<std::pair<Word, FieldElement>> trace_witness_search(const GroupSpec& spec,
                                                                  int max_len) {
  if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
  const size_t m = spec.generators.size();

  struct Node {
    Word word;
    SquareMatrix mat;
  };
  std::deque<Node> queue;
  std::unordered_set<std::string> seen;

  SquareMatrix id = SquareMatrix::identity(spec.field, spec.n);
  seen.insert(id.key());
  queue.push_back({Word::identity(), id});

  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    if (static_cast<int>(node.word.length()) >= max_len) continue;
    for (size_t l = 0; l < 2 * m; ++l) {
      int letter = l < m ? static_cast<int>(l) + 1 : -(static_cast<int>(l - m) + 1);
      const auto& last = node.word.letters();
      if (!last.empty() && last.back() == -letter) continue;  // stay reduced
      SquareMatrix mat =
          node.mat * (letter > 0 ? spec.generators[static_cast<size_t>(letter - 1)]
                                 : spec.inverses[static_cast<size_t>(-letter - 1)]);
      if (!seen.insert(mat.key()).second) continue;
      Word w = node.word.appended(letter);
      FieldElement tr = mat.trace();
      if (!tr.is_algebraic_integer()) return std::make_pair(w, tr);
      queue.push_back({std::move(w), std::move(mat)});
    }
  }
  return std::nullopt;
}

Realness classify_realness(const GroupSpec& spec) {
  if (!spec.field->has_embedding()) return Realness::Complex;
  return spec.field->is_real() ? Realness::Real : Realness::Complex;
}

Verdict certify(const GroupSpec& spec, const CertifyOptions& options) {
  Verdict v;
  v.realness = classify_realness(spec);
  if (!spec.field->has_embedding())
    v.realness_warning = "field has no pinned embedding; reporting complex";
  v.witness_search_len = options.max_word_len;

  AlgebraBasis basis = algebra_basis(spec.generators);
  v.algebra_dimension = basis.dimension();
  v.gram_det = basis.gram.det();
  v.completely_reducible = !v.gram_det->is_zero();

  // Integral traces are unconditionally necessary, so a witness refutes the
  // group outright no matter what the trace form looks like.
  if (auto witness = trace_witness_search(spec, options.max_word_len)) {
    v.kind = VerdictKind::NotNumerical;
    v.witness_word = witness->first;
    v.witness_trace = witness->second;
    v.witness_minpoly = witness->second.minimal_polynomial();
    return v;
  }

  const std::string degenerate_note =
      "trace criterion hypothesis unmet: trace form degenerate";

  auto ring = EuclideanOK::for_field(spec.field);
  if (!ring) {
    v.kind = VerdictKind::Inconclusive;
    v.reason = "construction requires principal/Euclidean O_K branch (ring of " +
               spec.field->to_string() + " is unsupported); no witness up to length " +
               std::to_string(options.max_word_len);
    if (!v.completely_reducible) v.reason += "; " + degenerate_note;
    return v;
  }

  v.closure_ran = true;
  ClosureOutcome closure = lattice_closure(spec.generators, *ring, options.max_rounds);
  v.closure_stabilized = closure.stabilized;
  v.closure_rounds = closure.rounds;
  v.closure_denoms = closure.denom_history;

  if (!closure.stabilized) {
    v.kind = VerdictKind::Inconclusive;
    v.reason = "lattice closure did not stabilize within " + std::to_string(options.max_rounds) +
               " rounds (denominator reached " + closure.module.denom.get_str() +
               "); no witness up to length " + std::to_string(options.max_word_len);
    if (!v.completely_reducible) v.reason += "; " + degenerate_note;
    return v;
  }

  // A verified conjugator is a proof on its own, even when the trace form is
  // degenerate and the iff criterion's hypothesis fails.
  SquareMatrix u = extract_basis(closure.module);
  v.conjugated_generators = conjugate_and_verify(u, spec.generators);
  v.conjugator = std::move(u);
  v.kind = VerdictKind::Numerical;

  if (v.witness_word.has_value())
    throw std::logic_error("verdict carries both a witness and a conjugator");
  return v;
}

}  // namespace numgroup

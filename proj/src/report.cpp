#include "numgroup/report.hpp"

#include <sstream>

namespace numgroup {

using nlohmann::json;

namespace {

json element_json(const FieldElement& x) {
  json out = json::array();
  for (const auto& s : x.coord_strings()) out.push_back(s);
  return out;
}

json matrix_json(const SquareMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(element_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json poly_json(const UniPoly& p) {
  json out = json::array();
  for (int k = 0; k <= p.degree(); ++k) out.push_back(p.coeff(k).get_str());
  return out;
}

const char* kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Numerical: return "numerical";
    case VerdictKind::NotNumerical: return "not_numerical";
    case VerdictKind::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace

int exit_code_for(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Numerical: return 0;
    case VerdictKind::NotNumerical: return 1;
    case VerdictKind::Inconclusive: return 2;
  }
  return 2;
}

json verdict_report(const GroupSpec& spec, const Verdict& v, const CertifyOptions& options,
                    double elapsed_ms) {
  json r;
  r["verdict"] = kind_name(v.kind);
  r["exit_code"] = exit_code_for(v.kind);
  r["field"] = spec.field->to_string();
  r["n"] = spec.n;
  r["completely_reducible"] = v.completely_reducible;
  r["algebra_dimension"] = v.algebra_dimension;
  if (v.gram_det) {
    r["gram_determinant"] = element_json(*v.gram_det);
    r["gram_determinant_pretty"] = v.gram_det->to_string();
  }
  r["realness"] = v.realness == Realness::Real ? "real" : "complex";
  if (!v.realness_warning.empty()) r["realness_warning"] = v.realness_warning;
  r["options"] = {{"max_word_len", options.max_word_len}, {"max_rounds", options.max_rounds}};

  if (v.witness_word) {
    json w;
    w["word"] = v.witness_word->to_string(spec.labels);
    json letters = json::array();
    for (int l : v.witness_word->letters()) letters.push_back(l);
    w["letters"] = letters;
    w["trace"] = element_json(*v.witness_trace);
    w["trace_pretty"] = v.witness_trace->to_string();
    w["minimal_polynomial"] = poly_json(*v.witness_minpoly);
    w["minimal_polynomial_pretty"] = v.witness_minpoly->to_string();
    r["witness"] = w;
  }

  if (v.conjugator) {
    r["conjugator"] = matrix_json(*v.conjugator);
    r["conjugator_pretty"] = v.conjugator->to_string();
    json gens = json::array();
    for (size_t i = 0; i < v.conjugated_generators.size(); ++i)
      gens.push_back({{"name", spec.labels[i]}, {"matrix", matrix_json(v.conjugated_generators[i])}});
    r["conjugated_generators"] = gens;
  }

  if (!v.reason.empty()) r["inconclusive_reason"] = v.reason;

  json closure;
  closure["ran"] = v.closure_ran;
  if (v.closure_ran) {
    closure["stabilized"] = v.closure_stabilized;
    closure["rounds"] = v.closure_rounds;
    json denoms = json::array();
    for (const auto& d : v.closure_denoms) denoms.push_back(d.get_str());
    closure["denominators"] = denoms;
  }
  r["closure"] = closure;
  r["timing_ms"] = elapsed_ms;
  return r;
}

std::string render_report_text(const json& r) {
  std::ostringstream os;
  os << "verdict: " << r["verdict"].get<std::string>() << "\n";
  os << "field: " << r["field"].get<std::string>() << ", n = " << r["n"].get<int>() << "\n";
  os << "trace form: algebra dimension " << r["algebra_dimension"].get<int>();
  if (r.contains("gram_determinant_pretty"))
    os << ", gram determinant " << r["gram_determinant_pretty"].get<std::string>();
  os << (r["completely_reducible"].get<bool>() ? " (nondegenerate)" : " (degenerate)") << "\n";
  os << "realness: " << r["realness"].get<std::string>();
  if (r.contains("realness_warning")) os << " (" << r["realness_warning"].get<std::string>() << ")";
  os << "\n";
  if (r.contains("witness")) {
    const json& w = r["witness"];
    os << "witness: word " << w["word"].get<std::string>() << ", trace "
       << w["trace_pretty"].get<std::string>() << ", minimal polynomial "
       << w["minimal_polynomial_pretty"].get<std::string>() << "\n";
  }
  if (r.contains("conjugator_pretty"))
    os << "conjugator: " << r["conjugator_pretty"].get<std::string>() << "\n";
  if (r.contains("inconclusive_reason"))
    os << "reason: " << r["inconclusive_reason"].get<std::string>() << "\n";
  const json& closure = r["closure"];
  if (closure["ran"].get<bool>()) {
    os << "closure: " << (closure["stabilized"].get<bool>() ? "stabilized" : "diverged")
       << " after " << closure["rounds"].get<int>() << " round(s)";
    if (!closure["denominators"].empty()) {
      os << ", denominators";
      for (const auto& d : closure["denominators"]) os << " " << d.get<std::string>();
    }
    os << "\n";
  }
  os << "time: " << r["timing_ms"].get<double>() << " ms\n";
  return os.str();
}

json traceform_report(const GroupSpec& spec, const AlgebraBasis& basis, double elapsed_ms) {
  FieldElement det = basis.gram.det();
  const int r = basis.dimension();
  std::string cls;
  if (det.is_zero())
    cls = "degenerate";
  else if (r == spec.n * spec.n)
    cls = "irreducible";
  else
    cls = "completely-reducible";

  json out;
  out["field"] = spec.field->to_string();
  out["n"] = spec.n;
  out["algebra_dimension"] = r;
  out["gram_determinant"] = element_json(det);
  out["gram_determinant_pretty"] = det.to_string();
  out["classification"] = cls;
  json words = json::array();
  for (const auto& w : basis.words) words.push_back(w.to_string(spec.labels));
  out["basis_words"] = words;
  out["timing_ms"] = elapsed_ms;
  return out;
}

std::string render_traceform_text(const json& r) {
  std::ostringstream os;
  os << "field: " << r["field"].get<std::string>() << ", n = " << r["n"].get<int>() << "\n";
  os << "algebra dimension: " << r["algebra_dimension"].get<int>() << "\n";
  os << "gram determinant: " << r["gram_determinant_pretty"].get<std::string>() << "\n";
  os << "classification: " << r["classification"].get<std::string>() << "\n";
  os << "basis words:";
  for (const auto& w : r["basis_words"]) os << " " << w.get<std::string>();
  os << "\n";
  os << "time: " << r["timing_ms"].get<double>() << " ms\n";
  return os.str();
}

}  // namespace numgroup

#pragma once

#include <string>

#include <json.hpp>

#include "numgroup/decider.hpp"

namespace numgroup {

/// Machine-readable report of a certification run. All fields except
/// timing_ms are deterministic for fixed input and options.
nlohmann::json verdict_report(const GroupSpec& spec, const Verdict& v,
                              const CertifyOptions& options, double elapsed_ms);

/// Human-readable rendering of the same report.
std::string render_report_text(const nlohmann::json& report);

/// Report for the trace-form command: algebra dimension, exact Gram
/// determinant, and the irreducible / completely-reducible / degenerate
/// classification.
nlohmann::json traceform_report(const GroupSpec& spec, const AlgebraBasis& basis,
                                double elapsed_ms);
std::string render_traceform_text(const nlohmann::json& report);

int exit_code_for(VerdictKind kind);

}  // namespace numgroup

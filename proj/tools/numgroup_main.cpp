#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "numgroup/decider.hpp"
#include "numgroup/fricke.hpp"
#include "numgroup/report.hpp"
#include "numgroup/spec_file.hpp"

namespace {

using namespace numgroup;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

constexpr int kExitInputError = 3;

int run_certify_on(const GroupSpec& spec, const CertifyOptions& options, bool as_json,
                   const std::string& annotation = "") {
  auto start = Clock::now();
  Verdict v = certify(spec, options);
  auto report = verdict_report(spec, v, options, ms_since(start));
  if (!annotation.empty()) report["annotation"] = annotation;
  if (as_json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << render_report_text(report);
    if (!annotation.empty()) std::cout << "note: " << annotation << "\n";
  }
  return exit_code_for(v.kind);
}

int cmd_certify(const std::string& path, const CertifyOptions& options, bool as_json) {
  GroupSpec spec = parse_spec_file(path);
  return run_certify_on(spec, options, as_json);
}

int cmd_traceform(const std::string& path, bool as_json) {
  GroupSpec spec = parse_spec_file(path);
  auto start = Clock::now();
  AlgebraBasis basis = algebra_basis(spec.generators);
  auto report = traceform_report(spec, basis, ms_since(start));
  if (as_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << render_traceform_text(report);
  return 0;
}

// Hecke's discreteness criterion, reported as documentation only: H(lambda)
// is discrete iff lambda >= 2 or lambda = 2cos(pi/q).
std::string discreteness_note(const Rational& lam) {
  if (lam >= 2) {
    bool integral = is_integer(lam);
    return integral ? "H(lambda) is discrete (lambda >= 2)"
                    : "H(lambda) is discrete (lambda >= 2) but not numerical";
  }
  if (lam == 1) return "H(1) is the modular group (lambda = 2cos(pi/3))";
  if (lam > 0) return "H(lambda) is not discrete (0 < lambda < 2 and lambda != 2cos(pi/q))";
  return "";
}

int cmd_hecke(int q, const std::string& lambda_str, long quadratic_d, std::string out_path,
              const CertifyOptions& options, bool as_json) {
  GroupSpec spec = [&]() {
    if (q > 0) {
      HeckeValue hv = hecke_value(q);
      return pi_lambda(hv.field, hv.lambda);
    }
    if (quadratic_d != 0) {
      FieldPtr field = NumberField::quadratic(quadratic_d);
      // Coordinates "c0,c1" in the power basis 1, sqrt(d).
      std::vector<Rational> coords;
      std::string rest = lambda_str;
      while (!rest.empty()) {
        auto comma = rest.find(',');
        coords.push_back(parse_rational(rest.substr(0, comma)));
        rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
      }
      if (coords.size() != 2) throw std::runtime_error("expected two coordinates for lambda");
      return pi_lambda(field, field->from_coords(std::move(coords)));
    }
    FieldPtr field = NumberField::rationals();
    return pi_lambda(field, field->from_rational(parse_rational(lambda_str)));
  }();

  std::string annotation;
  if (q > 0) {
    annotation = "H(2cos(pi/" + std::to_string(q) + ")) is discrete (lambda = 2cos(pi/q))";
  } else if (quadratic_d == 0) {
    annotation = discreteness_note(parse_rational(lambda_str));
  }

  if (out_path.empty()) {
    out_path = q > 0 ? "hecke_q" + std::to_string(q) + ".spec.json" : "hecke_lambda.spec.json";
  }
  write_spec_file(spec, out_path);
  std::cerr << "wrote " << out_path << "\n";

  return run_certify_on(spec, options, as_json, annotation);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decides, refutes or certifies integrality of finitely generated matrix groups "
               "over number fields"};
  app.require_subcommand(1);

  CertifyOptions options;
  bool as_json = false;
  std::string path;

  auto* certify_cmd = app.add_subcommand(
      "certify", "Run the full pipeline on a spec file (exit 0 numerical, 1 not numerical, "
                 "2 inconclusive, 3 input error)");
  certify_cmd->add_option("path", path, "group spec file")->required();
  certify_cmd->add_option("--max-word-len", options.max_word_len, "trace witness search depth");
  certify_cmd->add_option("--max-rounds", options.max_rounds, "lattice closure round budget");
  certify_cmd->add_flag("--json", as_json, "machine-readable output");

  auto* traceform_cmd =
      app.add_subcommand("traceform", "Report linear hull dimension and trace-form Gram data");
  traceform_cmd->add_option("path", path, "group spec file")->required();
  traceform_cmd->add_flag("--json", as_json, "machine-readable output");

  int hecke_q = 0;
  std::string lambda_str;
  long hecke_d = 0;
  std::string out_path;
  auto* hecke_cmd = app.add_subcommand(
      "hecke", "Generate the two-generator Pi(lambda) spec and certify it immediately");
  hecke_cmd->add_option("q", hecke_q, "lambda = 2cos(pi/q), q >= 3");
  hecke_cmd->add_option("--lambda", lambda_str,
                        "rational lambda (or coordinates c0,c1 with --quadratic-d)");
  hecke_cmd->add_option("--quadratic-d", hecke_d, "interpret --lambda in Q(sqrt(d))");
  hecke_cmd->add_option("--out", out_path, "where to write the generated spec");
  hecke_cmd->add_option("--max-word-len", options.max_word_len, "trace witness search depth");
  hecke_cmd->add_option("--max-rounds", options.max_rounds, "lattice closure round budget");
  hecke_cmd->add_flag("--json", as_json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(certify_cmd)) return cmd_certify(path, options, as_json);
    if (app.got_subcommand(traceform_cmd)) return cmd_traceform(path, as_json);
    if (app.got_subcommand(hecke_cmd)) {
      if (hecke_q == 0 && lambda_str.empty()) {
        std::cerr << "error: give q or --lambda\n";
        return kExitInputError;
      }
      if (hecke_q != 0 && hecke_q < 3) {
        std::cerr << "error: q must be >= 3\n";
        return kExitInputError;
      }
      return cmd_hecke(hecke_q, lambda_str, hecke_d, out_path, options, as_json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

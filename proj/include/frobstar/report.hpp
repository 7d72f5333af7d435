#pragma once

#include <string>

#include "frobstar/numerics.hpp"

namespace frobstar::report {

/// Everything one CLI invocation needs.
struct RunConfig {
  std::string command;            // check-axioms | characters | idempotents |
                                  // twisted | full-report
  std::string input_path;
  std::string automorphism_path;  // optional
  int m = 0;                      // optional override of the grading modulus
  Tolerance tol;
  std::string format = "text";    // text | json
  std::string out_path;           // empty -> stdout
};

struct RunResult {
  int exit_code = 0;  // 0 pass, 1 check failure, 2 input/structure error
  std::string text;   // human-readable report (or diagnostic on exit 2)
  std::string json;   // serialized report.v1 (empty on exit 2)
};

/// Parses inputs, runs the requested pipeline and renders the report.
/// Never throws: input and structure problems become exit code 2 with a
/// diagnostic in `text`.
RunResult run(const RunConfig& cfg);

}  // namespace frobstar::report

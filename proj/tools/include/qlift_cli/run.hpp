#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "qlift_cli/io.hpp"

namespace qlift::cli {

enum ExitStatus { kAllPass = 0, kCheckFailed = 1, kInvalidInput = 2 };

struct RunConfig {
  std::string command;  // gen | dilate | lift | coextend | verify | suite
  std::optional<Complex> q;
  Index depth = 4;
  Index copies = 2;
  std::uint64_t seed = 0;
  Index dim = 3;
  std::string family = "random";    // gen: jordan | hardy | random | intertwining
  std::string kind = "isometric";   // dilate: isometric | coisometric | unitary
  std::string engine = "isometric"; // lift: isometric | coiso | commutant | adjoint | unitary
  std::string mode = "triple";      // coextend: triple | intertwining
  Index pad = 0;                    // coextend triple: 0, 1 or 2 padding summands
  Complex a{1.0, 0.0};              // gen jordan entries
  Complex b{0.5, 0.0};
  Complex d{0.25, 0.0};
  std::string input;
  std::optional<Json> input_json;   // in-memory input, takes precedence over `input`
  std::string output = "-";
  Tolerances tol;
};

struct RunOutcome {
  int status = kAllPass;
  Json report;
  std::string diagnostic;
};

/// Runs a command without touching the output path.
RunOutcome execute(const RunConfig& config);

/// Runs a command, writes the report to config.output and diagnostics to err.
int run(const RunConfig& config, std::ostream& err);

/// Applies the QLIFT_TOL_RESIDUAL environment override.
Tolerances tolerances_from_env(Tolerances base);

}  // namespace qlift::cli

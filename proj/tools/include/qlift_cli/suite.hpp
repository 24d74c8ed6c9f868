#pragma once

// The acceptance suite shared by `qlift suite` and the acceptance binary.
// Every case is generated from the suite seed, so reports are reproducible.

#include <cstdint>
#include <string>
#include <vector>

#include "qlift_cli/io.hpp"

namespace qlift::cli {

struct Metric {
  std::string name;
  double worst = 0.0;
  double bound = 0.0;
  bool pass() const { return worst <= bound; }
};

struct CriterionOutcome {
  int id = 0;
  std::string title;
  long long cases = 0;
  std::vector<Metric> metrics;
  double seconds = 0.0;  // wall time; never serialized into reports
  bool pass() const;
};

inline constexpr int kCriterionCount = 11;

/// Runs the listed criteria (all when empty) in ascending order.
std::vector<CriterionOutcome> run_criteria(std::uint64_t seed, const Tolerances& tol,
                                           std::vector<int> which = {});

/// Deterministic JSON summary (no timings).
Json criteria_to_json(const std::vector<CriterionOutcome>& outcomes);

}  // namespace qlift::cli

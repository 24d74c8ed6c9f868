// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qlift_cli/io.hpp"
#include "qlift_cli/run.hpp"
#include "qlift_cli/suite.hpp"

using namespace qlift;
using namespace qlift::cli;

namespace {

constexpr std::uint64_t kSeed = 7;

// Wall-clock budgets in seconds; criteria without one are unbounded.
double runtime_budget(int id) {
  switch (id) {
    case 1: return 1.0;
    case 2: return 10.0;
    case 3: return 60.0;
    default: return 0.0;
  }
}

bool report(int id, const std::string& title, bool pass, const std::vector<Metric>& metrics) {
  std::printf("criterion %2d %s  %s\n", id, pass ? "PASS" : "FAIL", title.c_str());
  for (const Metric& m : metrics) {
    std::printf("    %-60s worst %.3e  bound %.3e%s\n", m.name.c_str(), m.worst, m.bound,
                m.pass() ? "" : "  <-- exceeded");
  }
  return pass;
}

}  // namespace

int main() {
  const Tolerances tol;
  bool all = true;

  std::vector<int> first_ten;
  for (int k = 1; k < kCriterionCount; ++k) first_ten.push_back(k);
  for (CriterionOutcome& o : run_criteria(kSeed, tol, first_ten)) {
    if (const double budget = runtime_budget(o.id); budget > 0.0) {
      o.metrics.push_back({"runtime (s)", o.seconds, budget});
    }
    all &= report(o.id, o.title, o.pass(), o.metrics);
  }

  RunConfig suite;
  suite.command = "suite";
  suite.seed = kSeed;
  const auto start = std::chrono::steady_clock::now();
  const RunOutcome a = execute(suite);
  const RunOutcome b = execute(suite);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool identical = dump(a.report) == dump(b.report);
  const bool ok = identical && a.status == kAllPass && b.status == kAllPass;
  all &= report(kCriterionCount, "determinism (suite --seed 7 twice)", ok,
                {{"report bytes differing between runs", identical ? 0.0 : 1.0, 0.0},
                 {"suite exit status", double(a.status + b.status), 0.0}});
  std::printf("    (two suite runs took %.1f s)\n", seconds);

  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}

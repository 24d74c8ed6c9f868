#pragma once

#include <map>
#include <string>
#include <vector>

#include "qlift/linalg.hpp"

namespace qlift {

/// Where a residual was measured. Truncated constructions only assert on
/// the interior window; boundary residuals go to Certificate::reported.
enum class Window { Interior, Full, Subspace };

std::string to_string(Window w);

struct CheckRecord {
  std::string label;
  double residual = 0.0;
  Window window = Window::Full;
  bool pass = false;
};

struct Certificate {
  std::string construction;
  std::vector<CheckRecord> checks;
  Tolerances tolerances;
  std::map<std::string, long long> depths;
  std::map<std::string, double> condition_numbers;
  std::map<std::string, double> norms;
  /// Residuals that are informative but never asserted (truncation boundary,
  /// heuristics).
  std::map<std::string, double> reported;
  bool heuristic = false;

  /// Appends a check; pass is residual <= residual_tol.
  void add(std::string label, double residual, Window window);
  /// Appends a check with an explicit pass threshold.
  void add(std::string label, double residual, Window window, double threshold);
  bool all_pass() const;
  const CheckRecord* find(const std::string& label) const;
  double max_residual() const;
};

}  // namespace qlift

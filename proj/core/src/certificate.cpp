#include "qlift/certificate.hpp"

#include <algorithm>

namespace qlift {

std::string to_string(Window w) {
  switch (w) {
    case Window::Interior: return "interior";
    case Window::Full: return "full";
    case Window::Subspace: return "subspace";
  }
  return "unknown";
}

void Certificate::add(std::string label, double residual, Window window) {
  checks.push_back({std::move(label), residual, window, residual <= tolerances.residual_tol});
}

void Certificate::add(std::string label, double residual, Window window, double threshold) {
  checks.push_back({std::move(label), residual, window, residual <= threshold});
}

bool Certificate::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

const CheckRecord* Certificate::find(const std::string& label) const {
  const auto it = std::find_if(checks.begin(), checks.end(),
                               [&](const CheckRecord& c) { return c.label == label; });
  return it == checks.end() ? nullptr : &*it;
}

double Certificate::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.residual);
  return m;
}

}  // namespace qlift

#include "qlift_cli/io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <sstream>

namespace qlift::cli {

Json to_json(const MatrixOp& m) {
  Json data = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) data.push_back({m(i, j).real(), m(i, j).imag()});
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

MatrixOp matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
    fail(ErrorCode::InvalidArgument, "matrix needs rows, cols and data");
  }
  const auto rows = j.at("rows").get<long long>();
  const auto cols = j.at("cols").get<long long>();
  const Json& data = j.at("data");
  if (rows < 0 || cols < 0 || !data.is_array() ||
      static_cast<long long>(data.size()) != rows * cols) {
    fail(ErrorCode::DimensionMismatch, "matrix data length must equal rows * cols");
  }
  MatrixOp m(rows, cols);
  for (long long k = 0; k < rows * cols; ++k) m(k / cols, k % cols) = complex_from_json(data[k]);
  require_finite(m, "matrix file");
  return m;
}

Json to_json(Complex z) { return {z.real(), z.imag()}; }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) fail(ErrorCode::InvalidArgument, "complex value must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json pair_to_json(const QPair& p) {
  return {{"T1", to_json(p.t1)}, {"T2", to_json(p.t2)}, {"q", to_json(p.q)}};
}

QPair pair_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("T1") || !j.contains("T2")) {
    fail(ErrorCode::InvalidArgument, "pair file needs T1 and T2");
  }
  QPair p;
  p.t1 = matrix_from_json(j.at("T1"));
  p.t2 = matrix_from_json(j.at("T2"));
  if (j.contains("q")) p.q = complex_from_json(j.at("q"));
  return p;
}

Json to_json(const Tolerances& t) {
  return {{"rank_tol", t.rank_tol}, {"psd_tol", t.psd_tol}, {"residual_tol", t.residual_tol}};
}

Json to_json(const Certificate& c) {
  Json checks = Json::array();
  for (const auto& r : c.checks) {
    checks.push_back({{"label", r.label},
                      {"residual", r.residual},
                      {"window", to_string(r.window)},
                      {"pass", r.pass}});
  }
  Json out = {{"construction", c.construction}, {"checks", checks}};
  out["norms"] = Json::object();
  for (const auto& [k, v] : c.norms) out["norms"][k] = v;
  out["condition_numbers"] = Json::object();
  for (const auto& [k, v] : c.condition_numbers) out["condition_numbers"][k] = v;
  out["depths"] = Json::object();
  for (const auto& [k, v] : c.depths) out["depths"][k] = v;
  out["reported"] = Json::object();
  for (const auto& [k, v] : c.reported) out["reported"][k] = v;
  if (c.heuristic) out["heuristic"] = true;
  out["all_pass"] = c.all_pass();
  return out;
}

Complex parse_q(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) fail(ErrorCode::InvalidArgument, "cannot parse q from '" + text + "'");
    return v;
  };
  if (const auto at = text.find('@'); at != std::string::npos) {
    const double r = number(text.substr(0, at));
    const double deg = number(text.substr(at + 1));
    // Exact values at multiples of 90 degrees keep q = i and friends exact.
    const double turns = deg / 90.0;
    if (turns == std::round(turns)) {
      static const Complex units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      const long long k = static_cast<long long>(std::round(turns));
      return r * units[((k % 4) + 4) % 4];
    }
    return std::polar(r, deg * std::numbers::pi / 180.0);
  }
  if (const auto comma = text.find(','); comma != std::string::npos) {
    return {number(text.substr(0, comma)), number(text.substr(comma + 1))};
  }
  return {number(text), 0.0};
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) fail(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qlift::cli

#pragma once

// Independent reference computations used to derive expected values. None of
// these call into the library's spectral routines.

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat ginibre(Eigen::Index r, Eigen::Index c, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, std::sqrt(0.5));
  Mat m(r, c);
  for (Eigen::Index j = 0; j < c; ++j) {
    for (Eigen::Index i = 0; i < r; ++i) {
      const double re = g(rng);
      m(i, j) = Complex(re, g(rng));
    }
  }
  return m;
}

/// Largest singular value by power iteration on M^* M.
inline double power_norm(const Mat& m, int iterations = 5000) {
  if (m.size() == 0) return 0.0;
  Vec x = Vec::Ones(m.cols()) + Complex(0.0, 0.37) * Vec::LinSpaced(m.cols(), 0.1, 1.0);
  double prev = 0.0;
  double est = 0.0;
  for (int k = 0; k < iterations; ++k) {
    const Vec y = m.adjoint() * (m * x);
    const double ny = y.norm();
    if (ny == 0.0) return 0.0;
    x = y / ny;
    est = std::sqrt(ny);
    if (k > 50 && std::abs(est - prev) < 1e-16 * est) break;
    prev = est;
  }
  return (m * x).norm();
}

/// Minimum of f over [lo, hi] by a uniform grid followed by zoomed grids.
inline double grid_min(const std::function<double(double)>& f, double lo, double hi, int points,
                       int rounds) {
  double best = INFINITY;
  double best_x = lo;
  for (int r = 0; r < rounds; ++r) {
    const double h = (hi - lo) / (points - 1);
    for (int k = 0; k < points; ++k) {
      const double x = lo + k * h;
      const double v = f(x);
      if (v < best) {
        best = v;
        best_x = x;
      }
    }
    lo = best_x - 2.0 * h;
    hi = best_x + 2.0 * h;
  }
  return best;
}

/// Largest singular value of a real 2x2 matrix in closed form.
inline double sigma_max_2x2(double a, double b, double c, double d) {
  const double s = a * a + b * b + c * c + d * d;
  const double det = a * d - b * c;
  return std::sqrt(0.5 * (s + std::sqrt(std::max(0.0, s * s - 4.0 * det * det))));
}

/// #{(i, j) : |lambda_i - q lambda_j| <= eps}.
inline long long eigen_pair_count(const std::vector<Complex>& lambda, Complex q, double eps = 1e-9) {
  long long n = 0;
  for (const Complex a : lambda) {
    for (const Complex b : lambda) {
      if (std::abs(a - q * b) <= eps) ++n;
    }
  }
  return n;
}

/// Coordinate support of the smallest set containing `start` that is closed
/// under the nonzero pattern of V and V^*.
inline std::vector<bool> orbit_closure(const Mat& v, const std::vector<int>& start, double eps = 1e-14) {
  std::vector<bool> in(static_cast<std::size_t>(v.rows()), false);
  std::vector<int> stack = start;
  for (int s : start) in[static_cast<std::size_t>(s)] = true;
  while (!stack.empty()) {
    const int j = stack.back();
    stack.pop_back();
    for (int i = 0; i < v.rows(); ++i) {
      if (!in[static_cast<std::size_t>(i)] && (std::abs(v(i, j)) > eps || std::abs(v(j, i)) > eps)) {
        in[static_cast<std::size_t>(i)] = true;
        stack.push_back(i);
      }
    }
  }
  return in;
}

}  // namespace oracle

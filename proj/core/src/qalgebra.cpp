#include "qlift/qalgebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qlift {

namespace {

std::vector<MatrixOp> null_space_matrices(const MatrixOp& map, Index rows, Index cols,
                                          const Tolerances& tol) {
  const Index n = map.cols();
  Eigen::JacobiSVD<MatrixOp> svd(map, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double cut = s.size() == 0 ? 0.0 : tol.rank_tol * s(0);
  Index rank = 0;
  for (Index i = 0; i < s.size(); ++i) {
    if (s(i) > cut && s(i) > 0.0) ++rank;
  }
  std::vector<MatrixOp> out;
  for (Index k = rank; k < n; ++k) {
    const VectorOp v = svd.matrixV().col(k);
    out.push_back(Eigen::Map<const MatrixOp>(v.data(), rows, cols));
  }
  return out;
}

MatrixOp kron(const MatrixOp& a, const MatrixOp& b) {
  MatrixOp k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return k;
}

MatrixOp combine(const std::vector<MatrixOp>& basis, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  MatrixOp sum = zeros(basis.front().rows(), basis.front().cols());
  for (const MatrixOp& b : basis) sum += Complex(g(rng), g(rng)) * b;
  return sum;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

MatrixOp well_conditioned(Index n, std::mt19937_64& rng) {
  return identity(n) + 0.3 / std::sqrt(double(std::max<Index>(n, 1))) * ginibre(n, n, rng);
}

}  // namespace

void GeneratorSpec::validate() const {
  if (dim < 1) fail(ErrorCode::InvalidArgument, "generator dimension must be >= 1");
  if (q == Complex(0.0, 0.0)) fail(ErrorCode::QOutOfRange, "requires q != 0");
}

JordanPair example_pair_jordan(Complex a, Complex b, Complex d, Complex q) {
  if (q == Complex(0.0, 0.0)) fail(ErrorCode::QOutOfRange, "requires q != 0");
  JordanPair p;
  p.raw.q = q;
  p.raw.t1 = zeros(2, 2);
  p.raw.t1(0, 0) = a;
  p.raw.t1(1, 0) = b;
  p.raw.t1(1, 1) = q * a;
  p.raw.t2 = zeros(2, 2);
  p.raw.t2(1, 0) = d;
  p.scale = std::max(1.0, operator_norm(p.raw.t1));
  p.scaled = p.raw;
  p.scaled.t1 /= p.scale;
  return p;
}

QPair hardy_pair_truncated(Complex q, Index n) {
  if (q == Complex(0.0, 0.0) || std::abs(q) > 1.0) {
    fail(ErrorCode::QOutOfRange, "requires 0 < |q| <= 1 for the weighted model");
  }
  if (n < 2) fail(ErrorCode::InvalidArgument, "truncation size must be >= 2");
  QPair p;
  p.q = q;
  p.t1 = zeros(n, n);
  p.t2 = zeros(n, n);
  Complex w(1.0, 0.0);
  for (Index k = 0; k < n; ++k) {
    p.t1(k, k) = w;
    w *= q;
    if (k + 1 < n) p.t2(k + 1, k) = 1.0;
  }
  return p;
}

std::vector<MatrixOp> q_commutant_basis(const MatrixOp& t, Complex q, const Tolerances& tol) {
  if (t.rows() != t.cols()) fail(ErrorCode::DimensionMismatch, "q_commutant_basis needs a square T");
  require_finite(t, "T");
  const Index n = t.rows();
  // vec(TX) = (I (x) T) vec X and vec(XT) = (T^T (x) I) vec X, column-major.
  const MatrixOp map = kron(identity(n), t) - q * kron(t.transpose(), identity(n));
  return null_space_matrices(map, n, n, tol);
}

std::vector<MatrixOp> intertwiner_basis(const MatrixOp& t1, const MatrixOp& t2, Complex q,
                                        const Tolerances& tol) {
  if (t1.rows() != t1.cols() || t2.rows() != t2.cols()) {
    fail(ErrorCode::DimensionMismatch, "intertwiner_basis needs square T1 and T2");
  }
  require_finite(t1, "T1");
  require_finite(t2, "T2");
  const Index d1 = t1.rows();
  const Index d2 = t2.rows();
  const MatrixOp map = kron(t1.transpose(), identity(d2)) - q * kron(identity(d1), t2);
  return null_space_matrices(map, d2, d1, tol);
}

MatrixOp ginibre(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, std::sqrt(0.5));
  MatrixOp m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = g(rng);
      const double im = g(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

MatrixOp random_contraction(const GeneratorSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  MatrixOp m = ginibre(spec.dim, spec.dim, rng);
  double target = std::clamp(spec.norm, 0.0, 1.0);
  if (spec.strict) target = std::min(target, 1.0 - spec.margin);
  const double s = operator_norm(m);
  return s > 0.0 ? MatrixOp(m * (target / s)) : m;
}

QPair random_qpair(const GeneratorSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  const Index d = spec.dim;
  const Complex q = spec.q;
  VectorOp lambda(d);
  if (d == 1) {
    lambda(0) = 0.0;
  } else {
    Index filled = 0;
    while (filled < d) {
      const Index room = d - filled;
      Index len = std::min<Index>(room, 2 + static_cast<Index>(uniform(rng, 0.0, 2.0)));
      if (len == 1 && filled == 0) len = std::min<Index>(room, 2);
      Complex mu = std::polar(uniform(rng, 0.2, 1.0), uniform(rng, 0.0, 2.0 * std::numbers::pi));
      for (Index k = 0; k < len; ++k) {
        lambda(filled++) = mu;
        mu *= q;
      }
    }
  }
  const MatrixOp p = well_conditioned(d, rng);
  MatrixOp t1 = p * lambda.asDiagonal() * p.inverse();
  const std::vector<MatrixOp> basis = q_commutant_basis(t1, q);
  MatrixOp t2 = basis.empty() ? zeros(d, d) : combine(basis, rng);
  const double n1 = operator_norm(t1);
  if (n1 > 0.0) t1 *= uniform(rng, 0.5, 0.95) / (n1 * std::max(1.0, std::abs(q)));
  const double n2 = operator_norm(t2);
  if (n2 > 0.0) t2 *= uniform(rng, 0.3, 0.9) / n2;
  return {t1, t2, q};
}

IntertwiningInstance random_intertwining(const GeneratorSpec& spec, double a_norm) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  const Index d = spec.dim;
  const Complex q = spec.q;
  MatrixOp t2 = ginibre(d, d, rng);
  const MatrixOp a0 = well_conditioned(d, rng);
  MatrixOp t1 = q * a0.inverse() * t2 * a0;
  const double s = 0.95 / std::max(operator_norm(t1), operator_norm(t2));
  t1 *= s;
  t2 *= s;
  const std::vector<MatrixOp> basis = intertwiner_basis(t1, t2, q);
  MatrixOp a = basis.empty() ? MatrixOp(a0) : combine(basis, rng);
  a *= a_norm / operator_norm(a);
  return {a, t1, t2, q};
}

}  // namespace qlift

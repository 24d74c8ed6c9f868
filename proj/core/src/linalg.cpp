#include "qlift/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qlift {

namespace {

using Svd = Eigen::JacobiSVD<MatrixOp>;

MatrixOp symmetrized(const MatrixOp& p) { return (p + p.adjoint()) * 0.5; }

std::string shape(const MatrixOp& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols();
  return os.str();
}

}  // namespace

void Tolerances::validate() const {
  for (double v : {rank_tol, psd_tol, residual_tol}) {
    if (!(v > 0.0 && v < 1.0)) {
      fail(ErrorCode::InvalidArgument, "tolerances must lie strictly between 0 and 1");
    }
  }
}

MatrixOp Subspace::projection() const { return basis * basis.adjoint(); }

MatrixOp identity(Index n) { return MatrixOp::Identity(n, n); }

MatrixOp zeros(Index rows, Index cols) { return MatrixOp::Zero(rows, cols); }

Subspace coordinate_subspace(Index ambient_dim, Index begin, Index count) {
  if (begin < 0 || count < 0 || begin + count > ambient_dim) {
    fail(ErrorCode::DimensionMismatch, "coordinate range exceeds ambient dimension");
  }
  Subspace s{ambient_dim, zeros(ambient_dim, count)};
  for (Index k = 0; k < count; ++k) s.basis(begin + k, k) = 1.0;
  return s;
}

bool all_finite(const MatrixOp& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      const Complex z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

void require_finite(const MatrixOp& m, const char* what) {
  if (!all_finite(m)) fail(ErrorCode::NonFinite, std::string(what) + " has non-finite entries");
}

void require_same_shape(const MatrixOp& a, const MatrixOp& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorCode::DimensionMismatch,
         std::string(what) + ": " + shape(a) + " vs " + shape(b));
  }
}

double hermitian_defect(const MatrixOp& p) {
  if (p.rows() != p.cols()) return std::numeric_limits<double>::infinity();
  return operator_norm(p - p.adjoint());
}

double operator_norm(const MatrixOp& m) {
  if (m.size() == 0) return 0.0;
  if (m.rows() == 1 || m.cols() == 1) return m.norm();
  Svd svd(m);
  return svd.singularValues()(0);
}

Eigen::VectorXd singular_values(const MatrixOp& m) {
  if (m.size() == 0) return Eigen::VectorXd();
  Svd svd(m);
  return svd.singularValues();
}

double min_eigenvalue(const MatrixOp& hermitian) {
  if (hermitian.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<MatrixOp> es(symmetrized(hermitian), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double condition_number(const MatrixOp& m) {
  const Eigen::VectorXd s = singular_values(m);
  if (s.size() == 0) return 1.0;
  const Index full = std::min(m.rows(), m.cols());
  if (s.size() < full || s(s.size() - 1) == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / s(s.size() - 1);
}

MatrixOp psd_sqrt(const MatrixOp& p, const Tolerances& tol) {
  require_finite(p, "psd_sqrt input");
  if (p.rows() != p.cols()) fail(ErrorCode::DimensionMismatch, "psd_sqrt needs a square matrix");
  if (p.size() == 0) return p;
  const double scale = std::max(1.0, operator_norm(p));
  if (operator_norm(p - p.adjoint()) > tol.residual_tol * scale) {
    fail(ErrorCode::NotHermitian, "psd_sqrt input is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<MatrixOp> es(symmetrized(p));
  Eigen::VectorXd lambda = es.eigenvalues();
  if (lambda(0) < -tol.psd_tol * scale) {
    std::ostringstream os;
    os << "min eigenvalue " << lambda(0) << " below -psd_tol";
    fail(ErrorCode::NotPSD, os.str());
  }
  for (Index i = 0; i < lambda.size(); ++i) lambda(i) = std::sqrt(std::max(lambda(i), 0.0));
  const MatrixOp& u = es.eigenvectors();
  MatrixOp q = u * lambda.cast<Complex>().asDiagonal() * u.adjoint();
  return symmetrized(q);
}

MatrixOp defect(const MatrixOp& t, DefectSide side, const Tolerances& tol) {
  require_finite(t, "defect input");
  if (operator_norm(t) > 1.0 + tol.psd_tol) {
    fail(ErrorCode::NotContraction, "defect operator requires ||T|| <= 1");
  }
  if (side == DefectSide::Right) {
    return psd_sqrt(identity(t.cols()) - t.adjoint() * t, tol);
  }
  return psd_sqrt(identity(t.rows()) - t * t.adjoint(), tol);
}

MatrixOp pinv(const MatrixOp& m, const Tolerances& tol) {
  require_finite(m, "pinv input");
  if (m.size() == 0) return zeros(m.cols(), m.rows());
  Svd svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double cutoff = tol.rank_tol * s(0);
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(s.size());
  for (Index i = 0; i < s.size(); ++i) {
    if (s(i) > cutoff && s(i) > 0.0) inv(i) = 1.0 / s(i);
  }
  return svd.matrixV() * inv.cast<Complex>().asDiagonal() * svd.matrixU().adjoint();
}

bool psd_leq(const MatrixOp& a, const MatrixOp& b, const Tolerances& tol) {
  require_same_shape(a, b, "psd_leq");
  const double scale = std::max({1.0, operator_norm(a), operator_norm(b)});
  if (hermitian_defect(a) > tol.residual_tol * scale ||
      hermitian_defect(b) > tol.residual_tol * scale) {
    fail(ErrorCode::NotHermitian, "psd_leq operands must be Hermitian");
  }
  return min_eigenvalue(b - a) >= -tol.psd_tol * scale;
}

MatrixOp assemble_blocks(const BlockGrid& grid) {
  const std::size_t nr = grid.size();
  const std::size_t nc = nr ? grid.front().size() : 0;
  std::vector<Index> rows(nr, -1), cols(nc, -1);
  for (std::size_t i = 0; i < nr; ++i) {
    if (grid[i].size() != nc) fail(ErrorCode::DimensionMismatch, "ragged block grid");
    for (std::size_t j = 0; j < nc; ++j) {
      if (!grid[i][j]) continue;
      const MatrixOp& b = *grid[i][j];
      if (rows[i] >= 0 && rows[i] != b.rows()) fail(ErrorCode::DimensionMismatch, "block row heights disagree");
      if (cols[j] >= 0 && cols[j] != b.cols()) fail(ErrorCode::DimensionMismatch, "block column widths disagree");
      rows[i] = b.rows();
      cols[j] = b.cols();
    }
  }
  if (std::any_of(rows.begin(), rows.end(), [](Index r) { return r < 0; }) ||
      std::any_of(cols.begin(), cols.end(), [](Index c) { return c < 0; })) {
    fail(ErrorCode::DimensionMismatch, "cannot infer the shape of an all-zero block row or column");
  }
  return assemble_blocks(grid, rows, cols);
}

MatrixOp assemble_blocks(const BlockGrid& grid, const std::vector<Index>& row_dims,
                         const std::vector<Index>& col_dims) {
  if (grid.size() != row_dims.size()) fail(ErrorCode::DimensionMismatch, "row layout size");
  Index total_rows = 0, total_cols = 0;
  for (Index r : row_dims) total_rows += r;
  for (Index c : col_dims) total_cols += c;
  MatrixOp out = zeros(total_rows, total_cols);
  Index r0 = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i].size() != col_dims.size()) fail(ErrorCode::DimensionMismatch, "column layout size");
    Index c0 = 0;
    for (std::size_t j = 0; j < grid[i].size(); ++j) {
      if (grid[i][j]) {
        const MatrixOp& b = *grid[i][j];
        if (b.rows() != row_dims[i] || b.cols() != col_dims[j]) {
          fail(ErrorCode::DimensionMismatch, "block (" + std::to_string(i) + "," +
                                                 std::to_string(j) + ") has shape " + shape(b));
        }
        out.block(r0, c0, b.rows(), b.cols()) = b;
      }
      c0 += col_dims[j];
    }
    r0 += row_dims[i];
  }
  return out;
}

MatrixOp direct_sum(const std::vector<MatrixOp>& blocks) {
  Index r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  MatrixOp out = zeros(r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

Index BlockLayout::total() const {
  Index t = 0;
  for (Index s : sizes) t += s;
  return t;
}

Index BlockLayout::offset(std::size_t block) const {
  if (block > sizes.size()) fail(ErrorCode::LevelOutOfRange, "block index out of range");
  Index o = 0;
  for (std::size_t k = 0; k < block; ++k) o += sizes[k];
  return o;
}

MatrixOp extract_block(const MatrixOp& m, const BlockLayout& rows, const BlockLayout& cols,
                       std::size_t i, std::size_t j) {
  if (m.rows() != rows.total() || m.cols() != cols.total()) {
    fail(ErrorCode::DimensionMismatch, "layout does not match matrix " + shape(m));
  }
  return m.block(rows.offset(i), cols.offset(j), rows.size(i), cols.size(j));
}

Subspace orthonormalize(const MatrixOp& vectors, const Tolerances& tol) {
  require_finite(vectors, "orthonormalize input");
  Subspace out{vectors.rows(), zeros(vectors.rows(), 0)};
  if (vectors.size() == 0) return out;
  Svd svd(vectors, Eigen::ComputeThinU);
  const Eigen::VectorXd& s = svd.singularValues();
  if (s(0) == 0.0) return out;
  Index rank = 0;
  while (rank < s.size() && s(rank) > tol.rank_tol * s(0)) ++rank;
  out.basis = svd.matrixU().leftCols(rank);
  return out;
}

Subspace orthogonal_complement(const Subspace& s, const Tolerances& tol) {
  const Index n = s.ambient_dim;
  if (s.dim() == 0) return Subspace{n, identity(n)};
  Svd svd(s.basis, Eigen::ComputeFullU);
  const Eigen::VectorXd& sv = svd.singularValues();
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > tol.rank_tol * sv(0)) ++rank;
  return Subspace{n, svd.matrixU().rightCols(n - rank)};
}

Subspace relative_complement(const Subspace& s, const Subspace& within, const Tolerances& tol) {
  if (s.ambient_dim != within.ambient_dim) {
    fail(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
  }
  const Subspace coords{within.dim(), within.basis.adjoint() * s.basis};
  const Subspace rest = orthogonal_complement(coords, tol);
  return Subspace{s.ambient_dim, within.basis * rest.basis};
}

}  // namespace qlift

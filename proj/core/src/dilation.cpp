#include "qlift/dilation.hpp"

#include <cmath>
#include <sstream>

namespace qlift {

std::string to_string(DilationKind k) {
  switch (k) {
    case DilationKind::Isometric: return "isometric";
    case DilationKind::Coisometric: return "co-isometric";
    case DilationKind::Unitary: return "unitary";
  }
  return "unknown";
}

Index ChainSpace::block_count() const { return bilateral ? 2 * levels + 1 : levels + 1; }

Index ChainSpace::total_dim() const { return base_dim + (block_count() - 1) * block_dim; }

Index ChainSpace::base_offset() const { return bilateral ? levels * block_dim : 0; }

BlockLayout ChainSpace::layout() const {
  BlockLayout l;
  const Index blocks = block_count();
  for (Index b = 0; b < blocks; ++b) {
    const bool is_base = bilateral ? b == levels : b == 0;
    l.sizes.push_back(is_base ? base_dim : block_dim);
  }
  return l;
}

MatrixOp ChainSpace::projection(Index n) const {
  if (n < 0 || n > levels) {
    fail(ErrorCode::LevelOutOfRange,
         "chain level " + std::to_string(n) + " outside [0, " + std::to_string(levels) + "]");
  }
  MatrixOp p = zeros(total_dim(), total_dim());
  if (bilateral) {
    const Index begin = (levels - n) * block_dim;
    const Index count = base_dim + 2 * n * block_dim;
    p.block(begin, begin, count, count).setIdentity();
  } else {
    const Index count = base_dim + n * block_dim;
    p.topLeftCorner(count, count).setIdentity();
  }
  return p;
}

MatrixOp ChainSpace::base_embedding() const {
  return coordinate_subspace(total_dim(), base_offset(), base_dim).basis;
}

MatrixOp ChainSpace::embed_base(const MatrixOp& op_on_base) const {
  if (op_on_base.rows() != base_dim || op_on_base.cols() != base_dim) {
    fail(ErrorCode::DimensionMismatch, "embed_base: operator does not act on the base space");
  }
  MatrixOp m = zeros(total_dim(), total_dim());
  m.block(base_offset(), base_offset(), base_dim, base_dim) = op_on_base;
  return m;
}

MatrixOp ChainSpace::compress_to_base(const MatrixOp& m) const {
  if (m.rows() != total_dim() || m.cols() != total_dim()) {
    fail(ErrorCode::DimensionMismatch, "compress_to_base: operator does not act on the chain");
  }
  return m.block(base_offset(), base_offset(), base_dim, base_dim);
}

namespace {

void require_square_contraction(const MatrixOp& t, const Tolerances& tol, const char* who) {
  require_finite(t, who);
  if (t.rows() != t.cols()) {
    fail(ErrorCode::DimensionMismatch, std::string(who) + " needs an operator on one space");
  }
  if (operator_norm(t) > 1.0 + tol.psd_tol) {
    fail(ErrorCode::NotContraction, std::string(who) + " requires ||T|| <= 1");
  }
}

void require_levels(Index levels) {
  if (levels < 0) fail(ErrorCode::LevelOutOfRange, "truncation depth must be non-negative");
}

void require_q_range(const MatrixOp& t, Complex q, const Tolerances& tol) {
  if (std::abs(q) == 0.0) fail(ErrorCode::QOutOfRange, "q must be nonzero");
  if (std::abs(q) * operator_norm(t) > 1.0 + tol.psd_tol) {
    std::ostringstream os;
    os << "requires 0<|q|<=1/||T1|| (|q| = " << std::abs(q) << ", ||T1|| = " << operator_norm(t)
       << ")";
    fail(ErrorCode::QOutOfRange, os.str());
  }
}

}  // namespace

DilationBundle schaeffer_isometric(const MatrixOp& t, Index levels, const Tolerances& tol) {
  require_square_contraction(t, tol, "schaeffer_isometric");
  require_levels(levels);
  const Index d = t.rows();
  DilationBundle b;
  b.chain = ChainSpace{d, d, levels, false};
  b.kind = DilationKind::Isometric;
  b.source = t;
  b.op = zeros(b.chain.total_dim(), b.chain.total_dim());
  b.op.topLeftCorner(d, d) = t;
  if (levels >= 1) b.op.block(d, 0, d, d) = defect(t, DefectSide::Right, tol);
  for (Index k = 1; k < levels; ++k) b.op.block((k + 1) * d, k * d, d, d).setIdentity();
  return b;
}

DilationBundle coisometric_extension(const MatrixOp& t, Index levels, const Tolerances& tol) {
  require_square_contraction(t, tol, "coisometric_extension");
  DilationBundle b = schaeffer_isometric(t.adjoint(), levels, tol);
  b.op.adjointInPlace();
  b.kind = DilationKind::Coisometric;
  b.source = t;
  return b;
}

DilationBundle unitary_dilation(const MatrixOp& t, Index levels, const Tolerances& tol) {
  require_square_contraction(t, tol, "unitary_dilation");
  require_levels(levels);
  const Index d = t.rows();
  DilationBundle b;
  b.chain = ChainSpace{d, d, levels, true};
  b.kind = DilationKind::Unitary;
  b.source = t;
  const Index n = b.chain.total_dim();
  b.op = zeros(n, n);
  const Index h = b.chain.base_offset();
  b.op.block(h, h, d, d) = t;
  if (levels >= 1) {
    const Index minus1 = h - d;
    const Index plus1 = h + d;
    b.op.block(h, minus1, d, d) = defect(t, DefectSide::Left, tol);
    b.op.block(plus1, h, d, d) = defect(t, DefectSide::Right, tol);
    b.op.block(plus1, minus1, d, d) = -t.adjoint();
  }
  for (Index k = 1; k < levels; ++k) {
    // D_k -> D_{k+1} on the right, D_{-(k+1)} -> D_{-k} on the left.
    b.op.block(h + (k + 1) * d, h + k * d, d, d).setIdentity();
    b.op.block(h - k * d, h - (k + 1) * d, d, d).setIdentity();
  }
  return b;
}

DilationBundle q_scaled_coextension(const MatrixOp& t, Complex q, Index levels,
                                    const Tolerances& tol) {
  require_q_range(t, q, tol);
  DilationBundle b = coisometric_extension(q * t, levels, tol);
  b.source = t;
  b.q_scale = q;
  return b;
}

DilationBundle q_scaled_isometric(const MatrixOp& t, Complex q, Index levels,
                                  const Tolerances& tol) {
  require_q_range(t, q, tol);
  DilationBundle b = schaeffer_isometric(q * t, levels, tol);
  b.source = t;
  b.q_scale = q;
  return b;
}

Subspace minimal_reducing_subspace(const MatrixOp& v, const Subspace& h, const Tolerances& tol) {
  if (v.rows() != v.cols() || v.rows() != h.ambient_dim) {
    fail(ErrorCode::DimensionMismatch, "minimal_reducing_subspace: V must act on the ambient space");
  }
  Subspace current = orthonormalize(h.basis, tol);
  while (true) {
    MatrixOp grown(v.rows(), 3 * current.dim());
    grown << current.basis, v * current.basis, v.adjoint() * current.basis;
    Subspace next = orthonormalize(grown, tol);
    if (next.dim() == current.dim()) return next;
    current = std::move(next);
  }
}

MatrixOp chain_projection(const DilationBundle& b, Index n) { return b.chain.projection(n); }

MatrixOp interior_projection(const DilationBundle& b) {
  const ChainSpace& c = b.chain;
  MatrixOp p = identity(c.total_dim());
  if (c.bilateral) {
    if (c.levels == 0) return zeros(c.total_dim(), c.total_dim());
    p.topLeftCorner(c.block_dim, c.block_dim).setZero();
    p.bottomRightCorner(c.block_dim, c.block_dim).setZero();
    return p;
  }
  if (c.levels == 0) return zeros(c.total_dim(), c.total_dim());
  p.bottomRightCorner(c.block_dim, c.block_dim).setZero();
  return p;
}

double interior_isometry_defect(const DilationBundle& b) {
  const MatrixOp p = interior_projection(b);
  return operator_norm(p * (b.op.adjoint() * b.op - identity(b.op.cols())) * p);
}

double interior_coisometry_defect(const DilationBundle& b) {
  const MatrixOp p = interior_projection(b);
  return operator_norm(p * (b.op * b.op.adjoint() - identity(b.op.rows())) * p);
}

}  // namespace qlift

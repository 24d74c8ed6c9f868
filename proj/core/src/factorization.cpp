#include "qlift/factorization.hpp"

#include <algorithm>
#include <sstream>

namespace qlift {

MatrixOp douglas_solve(const MatrixOp& a, const MatrixOp& b, const Tolerances& tol) {
  require_finite(a, "douglas_solve A");
  require_finite(b, "douglas_solve B");
  if (a.rows() != b.rows()) {
    fail(ErrorCode::DimensionMismatch, "douglas_solve: A and B need a common codomain");
  }
  if (!psd_leq(a * a.adjoint(), b * b.adjoint(), tol)) {
    fail(ErrorCode::OrderViolated, "douglas_solve requires AA^* <= BB^*");
  }
  if (b.size() == 0 || a.size() == 0) return zeros(b.cols(), a.cols());
  Eigen::JacobiSVD<MatrixOp> svd(b, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  const MatrixOp coeff = svd.matrixU().adjoint() * a;
  Index rank = 0;
  while (rank < s.size() && s(rank) > tol.rank_tol * s(0) && s(rank) > 0.0) ++rank;
  auto solution = [&](Index r) -> MatrixOp {
    if (r == 0) return zeros(b.cols(), a.cols());
    const Eigen::VectorXd inv = s.head(r).cwiseInverse();
    return svd.matrixV().leftCols(r) * inv.cast<Complex>().asDiagonal() * coeff.topRows(r);
  };
  MatrixOp z = solution(rank);
  // Directions of B that are numerically tiny but above the rank cutoff carry
  // rounding noise that pinv amplifies past norm one. Dropping them costs at
  // most their singular value in the residual.
  const double budget = tol.residual_tol * (1.0 + operator_norm(a));
  while (rank > 0 && operator_norm(z) > 1.0 + kContractionSlack) {
    MatrixOp trial = solution(rank - 1);
    if (operator_norm(b * trial - a) > budget) break;
    z = std::move(trial);
    --rank;
  }
  return z;
}

TwoTermSolution two_term_douglas(const MatrixOp& a0, const MatrixOp& a1, const MatrixOp& a2,
                                 const Tolerances& tol) {
  if (a1.rows() != a0.rows() || a2.rows() != a0.rows()) {
    fail(ErrorCode::DimensionMismatch, "two_term_douglas: A0, A1, A2 need a common codomain");
  }
  MatrixOp stacked(a0.rows(), a1.cols() + a2.cols());
  stacked << a1, a2;
  const MatrixOp z = douglas_solve(a0, stacked, tol);
  return {z.topRows(a1.cols()), z.bottomRows(a2.cols())};
}

ParrottCompletion parrott_complete(const MatrixOp& a, const MatrixOp& b, const MatrixOp& c,
                                   const Tolerances& tol) {
  if (a.rows() != b.rows() || a.cols() != c.cols()) {
    fail(ErrorCode::DimensionMismatch, "parrott_complete: inconsistent block shapes");
  }
  MatrixOp column(a.rows() + c.rows(), a.cols());
  column << a, c;
  MatrixOp row(a.rows(), a.cols() + b.cols());
  row << a, b;
  ParrottCompletion out;
  out.mu = std::max(operator_norm(column), operator_norm(row));
  out.corner = zeros(c.rows(), b.cols());
  if (out.mu == 0.0) return out;

  const double s = 1.0 / out.mu;
  const MatrixOp an = a * s;
  // ||A/mu|| <= 1 up to rounding; clamp through the defect tolerance.
  const MatrixOp d_right = defect(an, DefectSide::Right, tol);
  const MatrixOp d_left = defect(an, DefectSide::Left, tol);
  const MatrixOp w = (c * s) * pinv(d_right, tol);
  const MatrixOp v = pinv(d_left, tol) * (b * s);
  out.corner = -(w * an.adjoint() * v) * out.mu;
  return out;
}

double DualParrottProblem::compatibility_residual() const {
  if (h.dim() == 0 || hp.dim() == 0) return 0.0;
  return operator_norm(hp.basis.adjoint() * x - xp.adjoint() * h.basis);
}

DualParrottExtension dual_parrott_extend(const DualParrottProblem& p, const Tolerances& tol) {
  if (p.h.ambient_dim != p.domain_dim || p.hp.ambient_dim != p.codomain_dim) {
    fail(ErrorCode::DimensionMismatch, "dual_parrott_extend: subspaces do not match ambient spaces");
  }
  if (p.x.rows() != p.codomain_dim || p.x.cols() != p.h.dim() ||
      p.xp.rows() != p.domain_dim || p.xp.cols() != p.hp.dim()) {
    fail(ErrorCode::DimensionMismatch, "dual_parrott_extend: X or X' has the wrong shape");
  }
  require_finite(p.x, "dual_parrott_extend X");
  require_finite(p.xp, "dual_parrott_extend X'");

  DualParrottExtension out;
  out.compatibility = p.compatibility_residual();
  const double scale = std::max({1.0, operator_norm(p.x), operator_norm(p.xp)});
  if (out.compatibility > tol.residual_tol * scale) {
    std::ostringstream os;
    os << "pairing identity <Xh,h'> = <h,X'h'> fails with residual " << out.compatibility;
    fail(ErrorCode::Incompatible, os.str());
  }

  const Subspace h_perp = orthogonal_complement(p.h, tol);
  const Subspace hp_perp = orthogonal_complement(p.hp, tol);

  const MatrixOp a = p.hp.basis.adjoint() * p.x;
  const MatrixOp c = hp_perp.basis.adjoint() * p.x;
  const MatrixOp b = (h_perp.basis.adjoint() * p.xp).adjoint();
  const ParrottCompletion corner = parrott_complete(a, b, c, tol);

  MatrixOp out_basis(p.codomain_dim, p.hp.dim() + hp_perp.dim());
  out_basis << p.hp.basis, hp_perp.basis;
  MatrixOp in_basis(p.domain_dim, p.h.dim() + h_perp.dim());
  in_basis << p.h.basis, h_perp.basis;
  const MatrixOp inner = assemble_blocks({{a, b}, {c, corner.corner}},
                                         {a.rows(), c.rows()}, {a.cols(), b.cols()});
  out.y = out_basis * inner * in_basis.adjoint();
  out.mu = std::max(operator_norm(p.x), operator_norm(p.xp));
  if (p.h.dim() > 0) out.extension_residual = operator_norm(out.y * p.h.basis - p.x);
  if (p.hp.dim() > 0) {
    out.coextension_residual = operator_norm(out.y.adjoint() * p.hp.basis - p.xp);
  }
  return out;
}

TriangularCompletion triangular_complete(const MatrixOp& t1, const MatrixOp& t2,
                                         const MatrixOp& c, const Tolerances& tol) {
  if (c.rows() != t2.rows() || c.cols() != t1.cols()) {
    fail(ErrorCode::DimensionMismatch, "triangular_complete: C must map dom(T1) into cod(T2)");
  }
  if (operator_norm(c) > 1.0 + tol.psd_tol) {
    fail(ErrorCode::NotContraction, "triangular_complete requires a contraction C");
  }
  TriangularCompletion out;
  out.x = defect(t2, DefectSide::Left, tol) * c * defect(t1, DefectSide::Right, tol);
  out.y = assemble_blocks({{t1, std::nullopt}, {out.x, t2}}, {t1.rows(), t2.rows()},
                          {t1.cols(), t2.cols()});
  return out;
}

MatrixOp triangular_extract(const MatrixOp& t1, const MatrixOp& t2, const MatrixOp& x,
                            const Tolerances& tol) {
  if (x.rows() != t2.rows() || x.cols() != t1.cols()) {
    fail(ErrorCode::DimensionMismatch, "triangular_extract: X must map dom(T1) into cod(T2)");
  }
  const MatrixOp d1 = defect(t1, DefectSide::Right, tol);
  const MatrixOp d2s = defect(t2, DefectSide::Left, tol);
  const MatrixOp c = pinv(d2s, tol) * x * pinv(d1, tol);
  const double range_residual = operator_norm(d2s * c * d1 - x);
  if (range_residual > tol.residual_tol * (1.0 + operator_norm(x))) {
    fail(ErrorCode::RangeViolation, "X is not supported on the defect ranges of T1 and T2^*");
  }
  const MatrixOp y = assemble_blocks({{t1, std::nullopt}, {x, t2}}, {t1.rows(), t2.rows()},
                                     {t1.cols(), t2.cols()});
  if (operator_norm(y) > 1.0 + tol.psd_tol) {
    fail(ErrorCode::NotCompletable, "[[T1, 0], [X, T2]] is not a contraction");
  }
  return c;
}

}  // namespace qlift

#include "qlift/verify.hpp"

#include <cmath>

namespace qlift {

namespace {

MatrixOp matrix_power(const MatrixOp& m, Index k) {
  MatrixOp out = identity(m.rows());
  for (Index i = 0; i < k; ++i) out = out * m;
  return out;
}

}  // namespace

Certificate check_q_commuting(const MatrixOp& t1, const MatrixOp& t2, Complex q,
                              const Tolerances& tol) {
  if (t1.rows() != t1.cols() || t2.rows() != t2.cols() || t1.rows() != t2.rows()) {
    fail(ErrorCode::DimensionMismatch, "q-commutation needs square T1, T2 on the same space");
  }
  Certificate c;
  c.construction = "check_q_commuting";
  c.tolerances = tol;
  const double r = operator_norm(t1 * t2 - q * t2 * t1) /
                   (1.0 + operator_norm(t1) * operator_norm(t2));
  c.add("T1 T2 = q T2 T1", r, Window::Full);
  return c;
}

Certificate check_dilation_identity(const DilationBundle& b, Index max_power,
                                    const Tolerances& tol) {
  if (max_power < 0 || max_power > b.chain.levels) {
    fail(ErrorCode::LevelOutOfRange, "power " + std::to_string(max_power) +
                                         " outside 0.." + std::to_string(b.chain.levels));
  }
  Certificate c;
  c.construction = "check_dilation_identity";
  c.tolerances = tol;
  c.depths["levels"] = b.chain.levels;
  c.depths["max_power"] = max_power;
  const MatrixOp t = b.q_scale * b.source;
  MatrixOp vk = identity(b.op.rows());
  MatrixOp tk = identity(t.rows());
  for (Index k = 0; k <= max_power; ++k) {
    c.add("P_H V^" + std::to_string(k) + "|_H = T^" + std::to_string(k),
          operator_norm(b.chain.compress_to_base(vk) - tk), Window::Subspace);
    vk = vk * b.op;
    tk = tk * t;
  }
  if (b.kind == DilationKind::Unitary) {
    const MatrixOp va = b.op.adjoint();
    const MatrixOp ta = t.adjoint();
    for (Index k = 1; k <= max_power; ++k) {
      c.add("P_H V^-" + std::to_string(k) + "|_H = T^*" + std::to_string(k),
            operator_norm(b.chain.compress_to_base(matrix_power(va, k)) - matrix_power(ta, k)),
            Window::Subspace);
    }
  }
  return c;
}

Certificate check_lift(const LiftResult& r, const Tolerances& tol) {
  Certificate c;
  c.construction = "check_lift: " + r.construction;
  c.tolerances = tol;
  for (const Identity& id : r.identities) {
    const double recomputed = r.evaluate(id);
    double stored = std::nan("");
    if (id.asserted) {
      if (const CheckRecord* s = r.certificate.find(id.label)) stored = s->residual;
      c.add(id.label, recomputed, id.window);
    } else {
      const auto it = r.certificate.reported.find(id.label);
      if (it != r.certificate.reported.end()) stored = it->second;
      c.reported[id.label] = recomputed;
    }
    const double gap = std::isnan(stored) ? INFINITY : std::abs(recomputed - stored);
    c.add("stored residual: " + id.label, gap, Window::Full, kHonestyTol);
  }
  const double achieved = operator_norm(r.op);
  c.add("stored norm: ||op||", std::abs(achieved - r.norm_claim.achieved), Window::Full,
        kHonestyTol);
  c.norms["||op||"] = achieved;
  c.norms["target"] = r.norm_claim.target;
  return c;
}

Certificate purity_heuristic(const MatrixOp& op, const MatrixOp& window, Index powers,
                             const Tolerances& tol) {
  Certificate c;
  c.construction = "purity_heuristic";
  c.tolerances = tol;
  c.heuristic = true;
  c.depths["powers"] = powers;
  const MatrixOp adj = op.adjoint();
  MatrixOp pk = identity(op.rows());
  double prev = INFINITY;
  bool monotone = true;
  double last = operator_norm(window);
  for (Index k = 1; k <= powers; ++k) {
    pk = pk * adj;
    const double s = operator_norm(window * pk * window);
    c.reported["HEURISTIC decay k=" + std::to_string(k)] = s;
    if (s > prev + tol.residual_tol) monotone = false;
    prev = s;
    last = s;
  }
  c.add("HEURISTIC: ||P_W (op^*)^k P_W|| decays to <= 0.1", last, Window::Subspace, 0.1);
  if (!monotone) c.checks.back().pass = false;
  return c;
}

Certificate purity_heuristic(const DilationBundle& b, Index window, Index powers,
                             const Tolerances& tol) {
  if (window < 0 || window >= b.chain.levels) {
    fail(ErrorCode::LevelOutOfRange, "purity window must be below the chain depth");
  }
  Certificate c = purity_heuristic(b.op, b.chain.projection(window), powers, tol);
  c.depths["window"] = window;
  return c;
}

}  // namespace qlift

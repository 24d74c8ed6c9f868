#include "qlift/lifting.hpp"

#include <cmath>
#include <sstream>

#include "qlift/factorization.hpp"

namespace qlift {

namespace {

struct LevelWindow {
  Index begin = 0;
  Index size = 0;
};

MatrixOp window_projection(Index total, const LevelWindow& w) {
  MatrixOp p = zeros(total, total);
  p.block(w.begin, w.begin, w.size, w.size).setIdentity();
  return p;
}

std::string fmt_residual(double r) {
  std::ostringstream os;
  os.precision(3);
  os << r;
  return os.str();
}

void require_q_bound(const MatrixOp& t1, Complex q, const Tolerances& tol) {
  const double bound = std::abs(q) * operator_norm(t1);
  if (std::abs(q) == 0.0 || bound > 1.0 + tol.psd_tol) {
    fail(ErrorCode::QOutOfRange, "requires 0<|q|<=1/||T1|| (|q| ||T1|| = " + fmt_residual(bound) + ")");
  }
}

void require_levels(Index levels) {
  if (levels < 0) fail(ErrorCode::LevelOutOfRange, "truncation depth must be non-negative");
}

Complex int_power(Complex z, Index n) {
  Complex out{1.0, 0.0};
  for (Index k = 0; k < n; ++k) out *= z;
  return out;
}

std::vector<std::string> repeat(const std::string& name, Index n) {
  return std::vector<std::string>(static_cast<std::size_t>(n), name);
}

std::vector<std::string> concat(std::initializer_list<std::vector<std::string>> parts) {
  std::vector<std::string> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Builds Y with P'_{n-1} C' Y = lambda Y_{n-1} C_d on every level window,
// one dual Parrott extension per level. `base` is the full-size level-0 map.
struct ChainEngine {
  const MatrixOp& ccod;
  const MatrixOp& cdom;
  Complex lambda;
  std::vector<LevelWindow> dom;
  std::vector<LevelWindow> cod;

  MatrixOp run(MatrixOp y, Certificate& cert, const Tolerances& tol) const {
    for (std::size_t n = 1; n < dom.size(); ++n) {
      const LevelWindow& d = dom[n];
      const LevelWindow& dp = dom[n - 1];
      const LevelWindow& c = cod[n];
      const LevelWindow& cp = cod[n - 1];
      DualParrottProblem prob;
      prob.domain_dim = d.size;
      prob.codomain_dim = c.size;
      prob.h = coordinate_subspace(d.size, dp.begin - d.begin, dp.size);
      prob.x = y.block(c.begin, dp.begin, c.size, dp.size);
      prob.hp = Subspace{c.size, ccod.adjoint().block(c.begin, cp.begin, c.size, cp.size)};
      prob.xp = std::conj(lambda) * cdom.adjoint().block(d.begin, dp.begin, d.size, dp.size) *
                y.block(cp.begin, dp.begin, cp.size, dp.size).adjoint();
      const DualParrottExtension ext = dual_parrott_extend(prob, tol);
      y.block(c.begin, d.begin, c.size, d.size) = ext.y;
      const std::string prefix = "level " + std::to_string(n) + ": ";
      cert.reported[prefix + "extension residual"] = ext.extension_residual;
      cert.reported[prefix + "co-extension residual"] = ext.coextension_residual;
    }
    return y;
  }
};

// Identities shared by every chain-engine lift. `cod_name`/`dom_name` are
// the context names of C' and C_d, `relation` the label of C' Y = lambda Y C_d.
void record_chain_identities(LiftResult& r, const std::string& cod_name,
                             const std::string& dom_name, Complex lambda, Index levels,
                             double target, const std::string& relation) {
  const Index interior = std::max<Index>(levels - 1, 0);
  r.record({relation, Window::Interior,
            {term({cod_name, "op", dom_proj(interior)}),
             term({"op", dom_name, dom_proj(interior)}, -lambda)}});
  r.record({"boundary: " + relation, Window::Full,
            {term({cod_name, "op"}), term({"op", dom_name}, -lambda)}, std::nullopt, false});
  r.record({"||op|| = ||T2||", Window::Full, {term({"op"})}, target});
  for (Index n = 1; n <= levels; ++n) {
    const std::string prefix = "level " + std::to_string(n) + ": ";
    r.record({prefix + "per-level identity", Window::Subspace,
              {term({dom_proj(n), "op*", cod_proj(n), cod_name + "*"}),
               term({dom_name + "*", dom_proj(n - 1), "op*", cod_proj(n - 1)}, -std::conj(lambda))}});
    r.record({prefix + "compatibility", Window::Subspace,
              {term({cod_proj(n - 1), cod_name, "op", dom_proj(n - 1)}),
               term({cod_proj(n - 1), "op", dom_proj(n - 1), dom_name, dom_proj(n - 1)}, -lambda)}});
    r.record({prefix + "norm", Window::Subspace, {term({"op", dom_proj(n)})}, target});
  }
}

void add_projections(LiftResult& r, const std::vector<LevelWindow>& dom,
                     const std::vector<LevelWindow>& cod) {
  for (std::size_t n = 0; n < dom.size(); ++n) {
    r.context[dom_proj(static_cast<Index>(n))] = window_projection(r.op.cols(), dom[n]);
    r.context[cod_proj(static_cast<Index>(n))] = window_projection(r.op.rows(), cod[n]);
  }
}

std::vector<LevelWindow> prefix_windows(const ChainSpace& c) {
  std::vector<LevelWindow> w;
  for (Index n = 0; n <= c.levels; ++n) w.push_back({0, c.base_dim + n * c.block_dim});
  return w;
}

void finish_norm(LiftResult& r, double target) {
  r.norm_claim = {operator_norm(r.op), target};
  r.certificate.norms["||op||"] = r.norm_claim.achieved;
  r.certificate.norms["||T2||"] = target;
}

// Shared driver for the co-isometric chain lifts on one-sided chains.
LiftResult coiso_chain_lift(const std::string& construction, const DilationBundle& cod,
                            const DilationBundle& dom, const std::string& cod_name,
                            const std::string& dom_name, Complex lambda, const MatrixOp& t2,
                            const std::string& relation, const Tolerances& tol) {
  LiftResult r;
  r.construction = construction;
  r.domain_chain = dom.chain;
  r.codomain_chain = cod.chain;
  r.certificate.construction = construction;
  r.certificate.tolerances = tol;
  r.certificate.depths["levels"] = cod.chain.levels;

  const double target = operator_norm(t2);
  const auto dwin = prefix_windows(dom.chain);
  const auto cwin = prefix_windows(cod.chain);
  MatrixOp y = zeros(cod.chain.total_dim(), dom.chain.total_dim());
  if (target > 0.0) {
    y.topLeftCorner(t2.rows(), t2.cols()) = t2;
    const ChainEngine engine{cod.op, dom.op, lambda, dwin, cwin};
    y = engine.run(std::move(y), r.certificate, tol);
  }
  r.op = std::move(y);
  r.context[cod_name] = cod.op;
  if (dom_name != cod_name) r.context[dom_name] = dom.op;
  r.context["E"] = dom.chain.base_embedding();
  r.context["T2"] = t2;
  add_projections(r, dwin, cwin);

  record_chain_identities(r, cod_name, dom_name, lambda, cod.chain.levels, target, relation);
  r.record({"op|_H = T2", Window::Subspace, {term({"op", "E"}), term({"E", "T2"}, -1.0)}});
  finish_norm(r, target);
  return r;
}

}  // namespace

double q_commutation_residual(const QPair& p) {
  const double scale = 1.0 + operator_norm(p.t1) * operator_norm(p.t2);
  return operator_norm(p.t1 * p.t2 - p.q * p.t2 * p.t1) / scale;
}

void validate_qpair(const QPair& p, const Tolerances& tol) {
  require_finite(p.t1, "T1");
  require_finite(p.t2, "T2");
  if (p.t1.rows() != p.t1.cols() || p.t2.rows() != p.t2.cols() || p.t1.rows() != p.t2.rows()) {
    fail(ErrorCode::DimensionMismatch, "T1 and T2 must act on the same space");
  }
  if (!std::isfinite(p.q.real()) || !std::isfinite(p.q.imag())) {
    fail(ErrorCode::NonFinite, "q must be finite");
  }
  if (std::abs(p.q) == 0.0) fail(ErrorCode::QOutOfRange, "requires q != 0");
  if (operator_norm(p.t1) > 1.0 + tol.psd_tol) {
    fail(ErrorCode::NotContraction, "requires ||T1|| <= 1");
  }
  const double r = q_commutation_residual(p);
  if (r > tol.residual_tol) {
    fail(ErrorCode::NotQCommuting, "requires T1 T2 = q T2 T1 (relative residual " + fmt_residual(r) + ")");
  }
}

LiftResult qpart_step(const MatrixOp& t, const MatrixOp& tp, const MatrixOp& s, const MatrixOp& sp,
                      const MatrixOp& t2, const Tolerances& tol) {
  const Index h1 = t.cols();
  const Index h2 = s.rows();
  const Index h1p = tp.cols();
  const Index h2p = sp.rows();
  if (t.rows() != h1 || s.cols() != h1 || tp.rows() != h1p || sp.cols() != h1p ||
      t2.rows() != h1p || t2.cols() != h1) {
    fail(ErrorCode::DimensionMismatch, "qpart_step: inconsistent block shapes");
  }
  for (const MatrixOp* m : {&t, &tp, &s, &sp, &t2}) require_finite(*m, "qpart_step input");

  const double tau = operator_norm(t2);
  const double intertwine = operator_norm(t2 * t - tp * t2);
  if (intertwine > tol.residual_tol * (1.0 + tau)) {
    fail(ErrorCode::HypothesisViolated, "requires T2 T = T' T2 (residual " + fmt_residual(intertwine) + ")");
  }
  const double col = operator_norm(t.adjoint() * t + s.adjoint() * s - identity(h1));
  if (col > tol.residual_tol) {
    fail(ErrorCode::HypothesisViolated, "requires T^*T + S^*S = I (residual " + fmt_residual(col) + ")");
  }
  const double colp = operator_norm(tp.adjoint() * tp + sp.adjoint() * sp - identity(h1p));
  if (colp > tol.residual_tol) {
    fail(ErrorCode::HypothesisViolated, "requires T'^*T' + S'^*S' = I (residual " + fmt_residual(colp) + ")");
  }

  LiftResult r;
  r.construction = "qpart_step";
  r.domain_chain = ChainSpace{h1, h2, 1, false};
  r.codomain_chain = ChainSpace{h1p, h2p, 1, false};
  r.certificate.construction = r.construction;
  r.certificate.tolerances = tol;

  MatrixOp a = zeros(h2p, h1);
  MatrixOp b = zeros(h2p, h2);
  MatrixOp top = zeros(h1p, h1);
  if (tau > 0.0) {
    const MatrixOp t2n = t2 / tau;
    const MatrixOp d = defect(t2n, DefectSide::Right, tol);
    const TwoTermSolution z = two_term_douglas(t2n.adjoint() * sp.adjoint(), t.adjoint() * d,
                                               s.adjoint(), tol);
    a = tau * (z.z1.adjoint() * d);
    b = tau * z.z2.adjoint();
    top = t2;
  }
  r.op = assemble_blocks({{top, std::nullopt}, {a, b}}, {h1p, h2p}, {h1, h2});
  r.context["V"] = assemble_blocks({{t, std::nullopt}, {s, std::nullopt}}, {h1, h2}, {h1, h2});
  r.context["Vp"] = assemble_blocks({{tp, std::nullopt}, {sp, std::nullopt}}, {h1p, h2p}, {h1p, h2p});
  r.context["E"] = r.domain_chain.base_embedding();
  r.context["Ec"] = r.codomain_chain.base_embedding();
  r.context["T2"] = t2;

  r.record({"Y V = V' Y", Window::Full, {term({"op", "V"}), term({"Vp", "op"}, -1.0)}});
  r.record({"||op|| = ||T2||", Window::Full, {term({"op"})}, tau});
  r.record({"op^*|_H' = T2^*", Window::Subspace, {term({"Ec*", "op"}), term({"T2", "E*"}, -1.0)}});
  finish_norm(r, tau);
  return r;
}

LiftResult isometric_lift_q(const QPair& p, Index levels, const Tolerances& tol) {
  require_q_bound(p.t1, p.q, tol);
  validate_qpair(p, tol);
  require_levels(levels);
  const DilationBundle v = schaeffer_isometric(p.t1, levels, tol);
  const DilationBundle vq = q_scaled_isometric(p.t1, p.q, levels, tol);
  const Index d = p.t1.rows();
  const double target = operator_norm(p.t2);

  LiftResult r;
  r.construction = "isometric_lift_q";
  r.domain_chain = vq.chain;
  r.codomain_chain = v.chain;
  r.certificate.construction = r.construction;
  r.certificate.tolerances = tol;
  r.certificate.depths["levels"] = levels;

  MatrixOp w = p.t2;
  if (target > 0.0) {
    for (Index n = 1; n <= levels; ++n) {
      const Index m = n * d;
      const LiftResult step =
          qpart_step(vq.op.topLeftCorner(m, m), v.op.topLeftCorner(m, m), vq.op.block(m, 0, d, m),
                     v.op.block(m, 0, d, m), w, tol);
      w = step.op;
      r.certificate.reported["level " + std::to_string(n) + ": step residual"] =
          step.certificate.max_residual();
    }
  } else {
    w = zeros(v.chain.total_dim(), vq.chain.total_dim());
  }
  r.op = std::move(w);
  r.context["V"] = v.op;
  r.context["qVq"] = vq.op;
  r.context["E"] = v.chain.base_embedding();
  r.context["T2"] = p.t2;
  add_projections(r, prefix_windows(vq.chain), prefix_windows(v.chain));

  r.record({"V W = q W V_q", Window::Full, {term({"V", "op"}), term({"op", "qVq"}, -1.0)}});
  r.record({"||op|| = ||T2||", Window::Full, {term({"op"})}, target});
  r.record({"W^*|_H = T2^*", Window::Subspace, {term({"op*", "E"}), term({"E", "T2*"}, -1.0)}});
  for (Index n = 1; n <= levels; ++n) {
    const std::string prefix = "level " + std::to_string(n) + ": ";
    const std::string pn = dom_proj(n);
    const std::string pcn = cod_proj(n);
    r.record({prefix + "V_n W_n = W_n (qV_q)_n", Window::Subspace,
              {term({pcn, "V", pcn, "op", pn}), term({pcn, "op", pn, "qVq", pn}, -1.0)}});
    r.record({prefix + "norm", Window::Subspace, {term({pcn, "op", pn})}, target});
  }
  finish_norm(r, target);
  return r;
}

LiftResult coiso_lift_q(const QPair& p, Index levels, const Tolerances& tol) {
  require_q_bound(p.t1, p.q, tol);
  validate_qpair(p, tol);
  require_levels(levels);
  const DilationBundle v = coisometric_extension(p.t1, levels, tol);
  const DilationBundle vq = q_scaled_coextension(p.t1, p.q, levels, tol);
  return coiso_chain_lift("coiso_lift_q", v, vq, "V", "qVq", 1.0, p.t2, "V Y = q Y V_q", tol);
}

LiftResult qcommutant_lift(const QPair& p, Index levels, const Tolerances& tol) {
  if (std::abs(p.q) > 1.0 + tol.psd_tol) {
    fail(ErrorCode::QOutOfRange, "requires 0<|q|<=1 (|q| = " + fmt_residual(std::abs(p.q)) + ")");
  }
  validate_qpair(p, tol);
  require_levels(levels);
  const DilationBundle v = coisometric_extension(p.t1, levels, tol);
  return coiso_chain_lift("qcommutant_lift", v, v, "V", "V", p.q, p.t2, "V S = q S V", tol);
}

LiftResult adjoint_lift_q(const MatrixOp& t, const MatrixOp& x, Complex q, Index levels,
                          const Tolerances& tol) {
  require_finite(t, "T");
  require_finite(x, "X");
  if (t.rows() != t.cols() || x.rows() != x.cols() || t.rows() != x.rows()) {
    fail(ErrorCode::DimensionMismatch, "T and X must act on the same space");
  }
  if (std::abs(q) == 0.0) fail(ErrorCode::QOutOfRange, "requires q != 0");
  const double rel = operator_norm(q * t * x - x * t) / (1.0 + operator_norm(t) * operator_norm(x));
  if (rel > tol.residual_tol) {
    fail(ErrorCode::NotQCommuting, "requires q T X = X T (relative residual " + fmt_residual(rel) + ")");
  }
  const LiftResult reduced = coiso_lift_q({t.adjoint(), x.adjoint(), std::conj(q)}, levels, tol);
  const DilationBundle v = schaeffer_isometric(t, levels, tol);
  const DilationBundle vq = q_scaled_isometric(t, q, levels, tol);
  const double target = operator_norm(x);

  LiftResult r;
  r.construction = "adjoint_lift_q";
  r.op = reduced.op.adjoint();
  r.domain_chain = v.chain;
  r.codomain_chain = vq.chain;
  r.certificate.construction = r.construction;
  r.certificate.tolerances = tol;
  r.certificate.depths["levels"] = levels;
  for (const auto& c : reduced.certificate.checks) {
    r.certificate.reported["reduced: " + c.label] = c.residual;
  }
  r.context["V"] = v.op;
  r.context["qVq"] = vq.op;
  r.context["E"] = v.chain.base_embedding();
  r.context["X"] = x;
  r.context["Z"] = reduced.op;
  add_projections(r, prefix_windows(v.chain), prefix_windows(vq.chain));

  const std::string pc = cod_proj(std::max<Index>(levels - 1, 0));
  r.record({"Y V = q V_q Y", Window::Interior,
            {term({pc, "op", "V"}), term({pc, "qVq", "op"}, -1.0)}});
  r.record({"boundary: Y V = q V_q Y", Window::Full,
            {term({"op", "V"}), term({"qVq", "op"}, -1.0)}, std::nullopt, false});
  r.record({"||op|| = ||X||", Window::Full, {term({"op"})}, target});
  r.record({"Y^*|_H = X^*", Window::Subspace, {term({"op*", "E"}), term({"E", "X*"}, -1.0)}});
  r.record({"Y = Z^* for the reduced co-isometric lift Z", Window::Full,
            {term({"op"}), term({"Z*"}, -1.0)}});
  finish_norm(r, target);
  return r;
}

LiftResult unitary_q_lift(const QPair& p, Index levels, const Tolerances& tol) {
  require_q_bound(p.t1, p.q, tol);
  validate_qpair(p, tol);
  require_levels(levels);
  const DilationBundle u = unitary_dilation(p.t1, levels, tol);
  const DilationBundle uq = unitary_dilation(p.q * p.t1, levels, tol);
  const LiftResult plus = isometric_lift_q(p, levels, tol);
  const Index d = p.t1.rows();
  const Index total = u.chain.total_dim();
  const Index h = u.chain.base_offset();
  const double target = operator_norm(p.t2);

  LiftResult r;
  r.construction = "unitary_q_lift";
  r.domain_chain = uq.chain;
  r.codomain_chain = u.chain;
  r.certificate.construction = r.construction;
  r.certificate.tolerances = tol;
  r.certificate.depths["levels"] = levels;
  for (const auto& c : plus.certificate.checks) {
    r.certificate.reported["positive half: " + c.label] = c.residual;
  }

  // Level n covers D_{-n}, ..., D_{-1}, H, D_1, ..., D_N.
  std::vector<LevelWindow> win;
  for (Index n = 0; n <= levels; ++n) win.push_back({h - n * d, (levels + 1 + n) * d});

  MatrixOp splus = zeros(total, total);
  splus.block(h, h, plus.op.rows(), plus.op.cols()) = plus.op;
  MatrixOp s = zeros(total, total);
  if (target > 0.0) {
    const ChainEngine engine{u.op, uq.op, 1.0, win, win};
    s = engine.run(splus, r.certificate, tol);
  }
  r.op = std::move(s);
  r.context["U"] = u.op;
  r.context["qUq"] = uq.op;
  r.context["E"] = u.chain.base_embedding();
  r.context["T1"] = p.t1;
  r.context["T2"] = p.t2;
  r.context["Splus"] = splus;
  add_projections(r, win, win);

  record_chain_identities(r, "U", "qUq", 1.0, levels, target, "U S = q S U_q");
  r.record({"S|_K+ = S_+", Window::Subspace, {term({"op", dom_proj(0)}), term({"Splus"}, -1.0)}});
  for (Index n = 0; n <= levels; ++n) {
    const std::string k = std::to_string(n);
    r.record({"P_H U^" + k + " S|_H = T1^" + k + " T2", Window::Subspace,
              {term(concat({{"E*"}, repeat("U", n), {"op", "E"}})),
               term(concat({repeat("T1", n), {"T2"}}), -1.0)}});
    r.record({"P_H S U_q^" + k + "|_H = T2 T1^" + k, Window::Subspace,
              {term(concat({{"E*", "op"}, repeat("qUq", n), {"E"}}), int_power(1.0 / p.q, n)),
               term(concat({{"T2"}, repeat("T1", n)}), -1.0)}});
  }
  finish_norm(r, target);
  return r;
}

}  // namespace qlift

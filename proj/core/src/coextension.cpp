#include "qlift/coextension.hpp"

#include <cmath>
#include <sstream>

namespace qlift {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

MatrixOp projection_onto_prefix(Index total, Index count) {
  MatrixOp p = zeros(total, total);
  p.topLeftCorner(count, count).setIdentity();
  return p;
}

MatrixOp embedding(Index total, Index count) {
  return coordinate_subspace(total, 0, count).basis;
}

// Window on which D^-1 V_cod D is co-isometric. With F = V_cod B - c B V_dom
// supported on the last domain block, D^-1 V D (D^-1 V D)^* - I equals
// D^-1 G D^-1 with G Hermitian and ranged in
// span(L_cod, B L_dom, B V_dom L_dom, V_cod B L_dom).
MatrixOp defect_window(const MatrixOp& vcod, const MatrixOp& b, const MatrixOp& vdom,
                       Index last_dom, Index last_cod, const MatrixOp& d, const Tolerances& tol) {
  const Index ncod = b.rows();
  const Index ndom = b.cols();
  const MatrixOp ldom = coordinate_subspace(ndom, ndom - last_dom, last_dom).basis;
  const MatrixOp lcod = coordinate_subspace(ncod, ncod - last_cod, last_cod).basis;
  MatrixOp spread(ncod, 4 * last_dom);
  spread.resize(ncod, last_cod + 3 * last_dom);
  spread << lcod, b * ldom, b * vdom * ldom, vcod * b * ldom;
  const Subspace bad = orthonormalize(spread, tol);
  const Subspace omega = orthogonal_complement(bad, tol);
  if (omega.dim() == 0) return zeros(ncod, ncod);
  return orthonormalize(d * omega.basis, tol).projection();
}

MatrixOp inverse_conjugate(const MatrixOp& d, const MatrixOp& v) {
  return d.llt().solve(v * d);
}

double coisometry_defect(const MatrixOp& m, const MatrixOp& window) {
  return operator_norm(window * (m * m.adjoint() - identity(m.rows())) * window);
}

double full_coisometry_defect(const MatrixOp& m) {
  return operator_norm(m * m.adjoint() - identity(m.rows()));
}

void require_strict(double norm, double margin, const char* what) {
  if (norm > 1.0 - margin) {
    fail(ErrorCode::NotStrictContraction, std::string("requires ||") + what + "|| < 1 (norm " +
                                              fmt(norm) + ", margin " + fmt(margin) + ")");
  }
}

double checked_condition(const MatrixOp& d, const Tolerances& tol, const char* what) {
  const double c = condition_number(d);
  if (!(c <= 1.0 / tol.rank_tol)) {
    fail(ErrorCode::IllConditionedDefect, std::string("cond(") + what + ") = " + fmt(c));
  }
  return c;
}

void replace_or_add(Certificate& into, const Certificate& from) {
  for (const auto& c : from.checks) {
    bool found = false;
    for (auto& existing : into.checks) {
      if (existing.label == c.label) {
        existing = c;
        found = true;
      }
    }
    if (!found) into.checks.push_back(c);
  }
  for (const auto& [k, v] : from.reported) into.reported[k] = v;
}

}  // namespace

Certificate certify_coextension(const CoextensionTriple& t, const Tolerances& tol) {
  Certificate c;
  c.construction = "q_coextension";
  c.tolerances = tol;
  const Index n = t.x1.rows();
  const MatrixOp e = embedding(n, t.base_dim);
  c.add("X1|_H = T1", operator_norm(t.x1 * e - e * t.t1), Window::Subspace);
  c.add("X2|_H = T2", operator_norm(t.x2 * e - e * t.t2), Window::Subspace);
  c.add("qX_q|_H = qT1", operator_norm(t.xq * e - e * (t.q * t.t1)), Window::Subspace);
  c.add("X1 X1^* = I", coisometry_defect(t.x1, t.x1_window), Window::Interior);
  c.add("X2 X2^* = I", coisometry_defect(t.x2, t.x2_window), Window::Interior);
  c.add("qX_q qX_q^* = I", coisometry_defect(t.xq, t.xq_window), Window::Interior);
  const MatrixOp comm = t.x1 * t.x2 - t.x2 * t.xq;
  c.add("X1 X2 = q X2 X_q", operator_norm(comm * t.commutation_window), Window::Interior);
  c.reported["boundary: X1 X2 = q X2 X_q"] = operator_norm(comm);
  c.reported["boundary: X1 X1^* = I"] = full_coisometry_defect(t.x1);
  c.reported["boundary: X2 X2^* = I"] = full_coisometry_defect(t.x2);
  c.reported["boundary: qX_q qX_q^* = I"] = full_coisometry_defect(t.xq);
  return c;
}

CoextensionTriple q_coextension(const QPair& p, Index levels, Index copies, const Tolerances& tol,
                                double strictness_margin) {
  validate_qpair(p, tol);
  if (copies < 0) fail(ErrorCode::LevelOutOfRange, "number of copies must be non-negative");
  require_strict(operator_norm(p.t2), strictness_margin, "T2");
  const LiftResult lift = coiso_lift_q(p, levels, tol);
  const MatrixOp& x = lift.op;
  const MatrixOp& v = lift.context.at("V");
  const MatrixOp& vq = lift.context.at("qVq");
  const Index n = x.rows();
  const Index d = p.t1.rows();

  const MatrixOp dx = defect(x, DefectSide::Left, tol);
  const double cond = checked_condition(dx, tol, "D_{X^*}");
  const MatrixOp r = inverse_conjugate(dx, v);

  const Index total = (copies + 1) * n;
  CoextensionTriple t;
  t.q = p.q;
  t.t1 = p.t1;
  t.t2 = p.t2;
  t.base_dim = d;
  t.x1 = zeros(total, total);
  t.x2 = zeros(total, total);
  t.xq = zeros(total, total);
  t.x1.topLeftCorner(n, n) = v;
  t.xq.topLeftCorner(n, n) = vq;
  t.x2.topLeftCorner(n, n) = x;
  if (copies >= 1) t.x2.block(0, n, n, n) = dx;
  for (Index k = 1; k <= copies; ++k) {
    t.x1.block(k * n, k * n, n, n) = r;
    t.xq.block(k * n, k * n, n, n) = r;
    if (k < copies) t.x2.block(k * n, (k + 1) * n, n, n).setIdentity();
  }

  const MatrixOp chain_interior = projection_onto_prefix(n, levels == 0 ? 0 : n - d);
  const MatrixOp pw = defect_window(v, x, vq, levels == 0 ? n : d, levels == 0 ? n : d, dx, tol);
  std::vector<MatrixOp> x1w{chain_interior};
  std::vector<MatrixOp> commw{chain_interior};
  std::vector<MatrixOp> x2w;
  for (Index k = 1; k <= copies; ++k) {
    x1w.push_back(pw);
    commw.push_back(identity(n));
  }
  for (Index k = 0; k <= copies; ++k) x2w.push_back(k < copies ? identity(n) : zeros(n, n));
  t.x1_window = direct_sum(x1w);
  t.xq_window = t.x1_window;
  t.x2_window = direct_sum(x2w);
  t.commutation_window = direct_sum(commw);

  t.certificate = certify_coextension(t, tol);
  t.certificate.depths["levels"] = levels;
  t.certificate.depths["copies"] = copies;
  t.certificate.condition_numbers["D_{X^*}"] = cond;
  t.certificate.norms["||X||"] = operator_norm(x);
  t.certificate.norms["||T2||"] = operator_norm(p.t2);
  const MatrixOp rr = r * r.adjoint() - identity(n);
  t.certificate.add("(D^-1 V D)(D^-1 V D)^* = I", operator_norm(pw * rr * pw), Window::Interior);
  t.certificate.reported["boundary: (D^-1 V D)(D^-1 V D)^* = I"] = operator_norm(rr);
  if (const CheckRecord* c = lift.certificate.find("V Y = q Y V_q")) {
    t.certificate.add("lift: V X = q X V_q", c->residual, Window::Interior);
  }
  if (const CheckRecord* c = lift.certificate.find("||op|| = ||T2||")) {
    t.certificate.add("lift: ||X|| = ||T2||", c->residual, Window::Full);
  }
  return t;
}

CoextensionTriple pad_coextension(const CoextensionTriple& base,
                                  const std::vector<DilationBundle>& extra,
                                  const Tolerances& tol) {
  if (extra.size() > 2) fail(ErrorCode::InvalidArgument, "pad_coextension takes one or two summands");
  for (const auto& b : extra) {
    if (b.op.rows() != b.op.cols()) fail(ErrorCode::DimensionMismatch, "padding summand must be square");
    if (b.op.rows() == 0) continue;
    const double defect_norm = interior_coisometry_defect(b);
    if (defect_norm > tol.residual_tol) {
      fail(ErrorCode::NotCoisometric,
           "padding summand is not co-isometric on its interior (defect " + fmt(defect_norm) + ")");
    }
  }
  if (extra.empty()) return base;

  CoextensionTriple t = base;
  auto window = [](const DilationBundle& b) {
    return b.op.rows() == 0 ? MatrixOp(0, 0) : interior_projection(b);
  };
  if (extra.size() == 1) {
    const DilationBundle& y2 = extra[0];
    const Index m = y2.op.rows();
    t.x2 = direct_sum({base.x2, y2.op});
    t.x1 = direct_sum({base.x1, identity(m)});
    t.xq = direct_sum({base.xq, identity(m)});
    t.x2_window = direct_sum({base.x2_window, window(y2)});
    t.x1_window = direct_sum({base.x1_window, identity(m)});
    t.xq_window = direct_sum({base.xq_window, identity(m)});
    t.commutation_window = direct_sum({base.commutation_window, identity(m)});
  } else {
    const DilationBundle& y1 = extra[0];
    const DilationBundle& y2 = extra[1];
    const Index m1 = y1.op.rows();
    const Index m2 = y2.op.rows();
    t.x2 = direct_sum({base.x2, identity(m1), identity(m2)});
    t.x1 = direct_sum({base.x1, y1.op, y2.op});
    t.xq = direct_sum({base.xq, y1.op, y2.op});
    t.x2_window = direct_sum({base.x2_window, identity(m1), identity(m2)});
    t.x1_window = direct_sum({base.x1_window, window(y1), window(y2)});
    t.xq_window = direct_sum({base.xq_window, window(y1), window(y2)});
    t.commutation_window = direct_sum({base.commutation_window, identity(m1), identity(m2)});
  }
  replace_or_add(t.certificate, certify_coextension(t, tol));
  t.certificate.depths["padding summands"] = static_cast<long long>(extra.size());
  return t;
}

IntertwiningCoextension q_intertwining_coextension(const MatrixOp& a, const MatrixOp& t1,
                                                   const MatrixOp& t2, Complex q, Index levels,
                                                   Index copies, const Tolerances& tol,
                                                   double strictness_margin) {
  require_finite(a, "A");
  require_finite(t1, "T1");
  require_finite(t2, "T2");
  const Index d1 = t1.rows();
  const Index d2 = t2.rows();
  if (t1.cols() != d1 || t2.cols() != d2 || a.rows() != d2 || a.cols() != d1) {
    fail(ErrorCode::DimensionMismatch, "requires A: H1 -> H2 with T1 on H1 and T2 on H2");
  }
  if (std::abs(std::abs(q) - 1.0) > tol.residual_tol) {
    fail(ErrorCode::QNotUnimodular, "requires |q| = 1 (|q| = " + fmt(std::abs(q)) + ")");
  }
  if (operator_norm(t1) > 1.0 + tol.psd_tol || operator_norm(t2) > 1.0 + tol.psd_tol) {
    fail(ErrorCode::NotContraction, "requires contractions T1 and T2");
  }
  if (copies < 0) fail(ErrorCode::LevelOutOfRange, "number of copies must be non-negative");
  const double norm_a = operator_norm(a);
  require_strict(norm_a, strictness_margin, "A");
  const double hyp = operator_norm(a * t1 - q * t2 * a) / (1.0 + norm_a);
  if (hyp > tol.residual_tol) {
    fail(ErrorCode::HypothesisViolated, "requires A T1 = q T2 A (relative residual " + fmt(hyp) + ")");
  }

  const Index dd = d1 + d2;
  const MatrixOp tt = direct_sum({t1, t2});
  MatrixOp at = zeros(dd, dd);
  at.block(d1, 0, d2, d1) = a;
  const LiftResult lift = qcommutant_lift({tt, at, std::conj(q)}, levels, tol);
  const MatrixOp& v = lift.context.at("V");

  std::vector<Index> l1;
  std::vector<Index> l2;
  for (Index k = 0; k <= levels; ++k) {
    for (Index i = 0; i < d1; ++i) l1.push_back(k * dd + i);
    for (Index i = 0; i < d2; ++i) l2.push_back(k * dd + d1 + i);
  }
  const MatrixOp b = lift.op(l2, l1);
  const MatrixOp v1 = v(l1, l1);
  const MatrixOp v2 = v(l2, l2);
  const Index n1 = static_cast<Index>(l1.size());
  const Index n2 = static_cast<Index>(l2.size());

  const MatrixOp db = defect(b, DefectSide::Left, tol);
  const double cond = checked_condition(db, tol, "D_{B^*}");
  const MatrixOp r = inverse_conjugate(db, v2);

  IntertwiningCoextension out;
  out.q = q;
  out.a = a;
  out.t1 = t1;
  out.t2 = t2;
  out.b = b;
  out.h1_dim = d1;
  out.h2_dim = d2;
  const Index rows = (copies + 1) * n2;
  const Index cols = n1 + copies * n2;
  out.y = zeros(rows, cols);
  out.x1 = zeros(cols, cols);
  out.x2 = zeros(rows, rows);
  out.y.topLeftCorner(n2, n1) = b;
  if (copies >= 1) out.y.block(0, n1, n2, n2) = db / q;
  for (Index k = 1; k < copies; ++k) out.y.block(k * n2, n1 + k * n2, n2, n2).setIdentity();
  out.x1.topLeftCorner(n1, n1) = v1;
  out.x2.topLeftCorner(n2, n2) = v2;
  for (Index k = 1; k <= copies; ++k) {
    out.x1.block(n1 + (k - 1) * n2, n1 + (k - 1) * n2, n2, n2) = (k == 1 ? q * r : r);
    out.x2.block(k * n2, k * n2, n2, n2) = r / q;
  }

  const MatrixOp p1 = projection_onto_prefix(n1, levels == 0 ? 0 : n1 - d1);
  const MatrixOp p2 = projection_onto_prefix(n2, levels == 0 ? 0 : n2 - d2);
  const MatrixOp pw =
      defect_window(v2, b, v1, levels == 0 ? n1 : d1, levels == 0 ? n2 : d2, db, tol);
  std::vector<MatrixOp> commw{p1};
  std::vector<MatrixOp> x1w{p1};
  std::vector<MatrixOp> x2w{p2};
  std::vector<MatrixOp> yw;
  for (Index k = 1; k <= copies; ++k) {
    commw.push_back(identity(n2));
    x1w.push_back(pw);
    x2w.push_back(pw);
  }
  for (Index k = 0; k <= copies; ++k) yw.push_back(k < copies ? identity(n2) : zeros(n2, n2));
  out.commutation_window = direct_sum(commw);
  out.x1_window = direct_sum(x1w);
  out.x2_window = direct_sum(x2w);
  out.y_window = direct_sum(yw);

  Certificate& c = out.certificate;
  c.construction = "q_intertwining_coextension";
  c.tolerances = tol;
  c.depths["levels"] = levels;
  c.depths["copies"] = copies;
  c.condition_numbers["D_{B^*}"] = cond;
  c.norms["||A||"] = norm_a;
  c.norms["||B||"] = operator_norm(b);
  const MatrixOp e1 = embedding(cols, d1);
  const MatrixOp e2 = embedding(rows, d2);
  c.add("Y|_H1 = A", operator_norm(out.y * e1 - e2 * a), Window::Subspace);
  c.add("X1|_H1 = T1", operator_norm(out.x1 * e1 - e1 * t1), Window::Subspace);
  c.add("X2|_H2 = T2", operator_norm(out.x2 * e2 - e2 * t2), Window::Subspace);
  c.add("Y Y^* = I", coisometry_defect(out.y, out.y_window), Window::Interior);
  c.add("X1 X1^* = I", coisometry_defect(out.x1, out.x1_window), Window::Interior);
  c.add("X2 X2^* = I", coisometry_defect(out.x2, out.x2_window), Window::Interior);
  const MatrixOp comm = out.y * out.x1 - q * out.x2 * out.y;
  c.add("Y X1 = q X2 Y", operator_norm(comm * out.commutation_window), Window::Interior);
  c.reported["boundary: Y X1 = q X2 Y"] = operator_norm(comm);
  c.add("B V1 = q V2 B", operator_norm((b * v1 - q * v2 * b) * p1), Window::Interior);
  const MatrixOp rr = r * r.adjoint() - identity(n2);
  c.add("(D^-1 V2 D)(D^-1 V2 D)^* = I", operator_norm(pw * rr * pw), Window::Interior);
  c.add("||B|| = ||A||", std::abs(operator_norm(b) - norm_a) / (1.0 + norm_a), Window::Full);
  return out;
}

}  // namespace qlift

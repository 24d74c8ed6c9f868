#pragma once

// q-commutant lifting engines.
//
// Conventions shared by every engine:
//  * chains are truncated at `levels` defect blocks; identities that only
//    hold for the infinite objects are asserted on the interior window and
//    their boundary residuals are reported;
//  * ||T2|| = 0 short-circuits to the zero lift;
//  * norm equalities are certified in relative form
//    | ||op|| - target | / (1 + target).

#include "qlift/lift_result.hpp"

namespace qlift {

/// T1 T2 = q T2 T1 with T1 a contraction.
struct QPair {
  MatrixOp t1;
  MatrixOp t2;
  Complex q{1.0, 0.0};
};

/// ||T1 T2 - q T2 T1|| / (1 + ||T1|| ||T2||).
double q_commutation_residual(const QPair& p);

/// Throws DimensionMismatch, NonFinite, NotContraction (T1), QOutOfRange
/// (q = 0) or NotQCommuting.
void validate_qpair(const QPair& p, const Tolerances& tol = {});

/// One step of the isometric induction: given column isometries
/// V = [[T, 0], [S, 0]] and V' = [[Tp, 0], [Sp, 0]] and T2 with T2 T = Tp T2,
/// returns Y = [[T2, 0], [A, B]] with Y V = V' Y and ||Y|| = ||T2||.
/// Throws HypothesisViolated naming the failing identity.
LiftResult qpart_step(const MatrixOp& t, const MatrixOp& tp, const MatrixOp& s, const MatrixOp& sp,
                      const MatrixOp& t2, const Tolerances& tol = {});

/// W between the truncated Schaeffer dilations of qT1 (domain) and T1
/// (codomain) with V W = q W V_q, W^*|_H = T2^* and ||W|| = ||T2||.
/// The induction is level-exact, so all three hold on the full truncation.
LiftResult isometric_lift_q(const QPair& p, Index levels, const Tolerances& tol = {});

/// Y between the truncated co-isometric extensions of qT1 (domain) and T1
/// (codomain) with V Y = q Y V_q, Y(H) in H, Y|_H = T2 and ||Y|| = ||T2||.
/// Each level is one dual Parrott extension.
LiftResult coiso_lift_q(const QPair& p, Index levels, const Tolerances& tol = {});

/// S on the truncated co-isometric extension V of T1 with V S = q S V,
/// S|_H = T2 and ||S|| = ||T2||. Requires 0 < |q| <= 1.
LiftResult qcommutant_lift(const QPair& p, Index levels, const Tolerances& tol = {});

/// Y from the isometric dilation of T to that of qT with Y V = q V_q Y,
/// Y^*(H) in H, Y^*|_H = X^* and ||Y|| = ||X||, given q T X = X T.
/// Computed as the adjoint of coiso_lift_q(T^*, X^*, conj(q)).
LiftResult adjoint_lift_q(const MatrixOp& t, const MatrixOp& x, Complex q, Index levels,
                          const Tolerances& tol = {});

/// S between the truncated unitary dilations of qT1 (domain) and T1
/// (codomain) with U S = q S U_q, ||S|| = ||T2|| and the power compressions
/// P_H U^n S|_H = T1^n T2 and P_H S U_q^n|_H = T2 T1^n.
LiftResult unitary_q_lift(const QPair& p, Index levels, const Tolerances& tol = {});

}  // namespace qlift

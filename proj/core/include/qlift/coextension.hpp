#pragma once

// Explicit co-isometric co-extensions built from a lifted operator X with
// invertible defect D = D_{X^*}:
//
//   X2 = [[X, D, 0, ...], [0, 0, I, ...], ...]   (truncated co-shift)
//   X1 = diag(V, D^-1 V D, ..., D^-1 V D)
//   qXq = diag(qV_q, D^-1 V D, ..., D^-1 V D)
//
// on `copies` + 1 copies of the truncated chain. The copies past the first
// use the window D * Omega, where Omega avoids the truncation boundary of
// the chain and its images under the maps that feed D^-1 V D.

#include <vector>

#include "qlift/certificate.hpp"
#include "qlift/dilation.hpp"
#include "qlift/lifting.hpp"

namespace qlift {

inline constexpr double kDefaultStrictnessMargin = 1e-6;

struct CoextensionTriple {
  MatrixOp x1;
  MatrixOp x2;
  MatrixOp xq;  // the operator q X_q
  Complex q{1.0, 0.0};
  MatrixOp t1;
  MatrixOp t2;
  /// H occupies the first base_dim coordinates.
  Index base_dim = 0;
  /// Interior windows (orthogonal projections on the full space).
  MatrixOp commutation_window;  // right factor of X1 X2 - X2 (qX_q)
  MatrixOp x1_window;
  MatrixOp x2_window;
  MatrixOp xq_window;
  Certificate certificate;
};

/// Co-isometric extensions X1, X2, qXq of T1, T2, qT1 with X1 X2 = q X2 X_q.
/// Throws NotStrictContraction unless ||T2|| <= 1 - strictness_margin and
/// IllConditionedDefect if cond(D_{X^*}) > 1 / rank_tol.
CoextensionTriple q_coextension(const QPair& p, Index levels, Index copies,
                                const Tolerances& tol = {},
                                double strictness_margin = kDefaultStrictnessMargin);

/// Re-evaluates the extension, co-isometry and commutation checks of a
/// triple on its stored windows.
Certificate certify_coextension(const CoextensionTriple& t, const Tolerances& tol = {});

/// Pads a triple with extra co-isometric summands.
///  * one summand Y2:      X2 + Y2, X1 + I,  qXq + I
///  * two summands Y1, Y2: X2 + I + I, X1 + Y1 + Y2, qXq + Y1 + Y2
/// Throws NotCoisometric when a summand is not co-isometric on its interior
/// window and InvalidArgument for more than two summands.
CoextensionTriple pad_coextension(const CoextensionTriple& base,
                                  const std::vector<DilationBundle>& extra,
                                  const Tolerances& tol = {});

struct IntertwiningCoextension {
  MatrixOp y;   // L1 + L2^copies -> L2 + L2^copies
  MatrixOp x1;  // on L1 + L2^copies
  MatrixOp x2;  // on L2 + L2^copies
  MatrixOp b;   // intertwiner on the chains with B V1 = q V2 B
  Complex q{1.0, 0.0};
  MatrixOp a;
  MatrixOp t1;
  MatrixOp t2;
  Index h1_dim = 0;
  Index h2_dim = 0;
  MatrixOp commutation_window;  // right factor of Y X1 - q X2 Y
  MatrixOp y_window;
  MatrixOp x1_window;
  MatrixOp x2_window;
  Certificate certificate;
};

/// Co-isometric extensions Y of A and X_i of T_i with Y X1 = q X2 Y, given
/// A T1 = q T2 A and |q| = 1. Throws QNotUnimodular, NotStrictContraction,
/// NotContraction or HypothesisViolated.
IntertwiningCoextension q_intertwining_coextension(const MatrixOp& a, const MatrixOp& t1,
                                                   const MatrixOp& t2, Complex q, Index levels,
                                                   Index copies, const Tolerances& tol = {},
                                                   double strictness_margin = kDefaultStrictnessMargin);

}  // namespace qlift

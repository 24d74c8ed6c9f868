#pragma once

// Uniform certificate evaluation. Every function here recomputes residuals
// from scratch; nothing is trusted from the construction that produced them.

#include "qlift/coextension.hpp"
#include "qlift/lift_result.hpp"

namespace qlift {

/// Bound on |recomputed - stored| for check_lift.
inline constexpr double kHonestyTol = 1e-12;

/// ||T1 T2 - q T2 T1|| / (1 + ||T1|| ||T2||). Throws DimensionMismatch.
Certificate check_q_commuting(const MatrixOp& t1, const MatrixOp& t2, Complex q,
                              const Tolerances& tol = {});

/// ||P_H op^k|_H - (q_scale source)^k|| for 0 <= k <= max_power, and for
/// unitary bundles also the negative powers through op^*.
/// Throws LevelOutOfRange if max_power exceeds the bundle's levels.
Certificate check_dilation_identity(const DilationBundle& b, Index max_power,
                                    const Tolerances& tol = {});

/// Re-evaluates every identity stored in a lift and compares against the
/// residual its certificate claims.
Certificate check_lift(const LiftResult& r, const Tolerances& tol = {});

/// HEURISTIC. Decay of ||P_W (op^*)^k P_W|| for k = 1..powers, with P_W the
/// projection onto H and the first `window` levels. Passes only if the
/// sequence is non-increasing and ends at or below 0.1.
/// Throws LevelOutOfRange unless window < levels.
Certificate purity_heuristic(const DilationBundle& b, Index window, Index powers,
                             const Tolerances& tol = {});

/// Same heuristic for an arbitrary operator and window projection.
Certificate purity_heuristic(const MatrixOp& op, const MatrixOp& window, Index powers,
                             const Tolerances& tol = {});

}  // namespace qlift

#pragma once

// Completion and factorization solvers: the Douglas range-inclusion lemma,
// its two-term form, the central Parrott completion, the dual Parrott
// (simultaneous extension) problem and lower-triangular contraction
// completions.

#include "qlift/linalg.hpp"

namespace qlift {

/// Slack allowed on ||Z|| <= 1 before douglas_solve raises its cutoff.
inline constexpr double kContractionSlack = 1e-12;

/// Solves A = B Z with a contraction Z, given AA^* <= BB^*.
/// Returns the minimal-norm solution pinv(B) A. If rounding pushes ||Z||
/// above 1 + kContractionSlack, the smallest retained singular values of B
/// are dropped one at a time while ||BZ - A|| stays within
/// residual_tol (1 + ||A||).
/// Throws OrderViolated if AA^* is not dominated by BB^*.
MatrixOp douglas_solve(const MatrixOp& a, const MatrixOp& b, const Tolerances& tol = {});

struct TwoTermSolution {
  MatrixOp z1;
  MatrixOp z2;
};

/// Finds Z1, Z2 with A1 Z1 + A2 Z2 = A0 and Z1^*Z1 + Z2^*Z2 <= I by
/// stacking [A1 A2] and calling douglas_solve.
TwoTermSolution two_term_douglas(const MatrixOp& a0, const MatrixOp& a1, const MatrixOp& a2,
                                 const Tolerances& tol = {});

struct ParrottCompletion {
  MatrixOp corner;  // D in [[A, B], [C, D]]
  double mu = 0.0;  // max(||[A; C]||, ||[A, B]||), the optimal completed norm
};

/// Central minimal-norm completion of [[A, B], [C, ?]].
ParrottCompletion parrott_complete(const MatrixOp& a, const MatrixOp& b, const MatrixOp& c,
                                   const Tolerances& tol = {});

/// Data for the simultaneous extension problem: find Y: C^domain -> C^codomain
/// with Y|_H = X and Y^*|_{H'} = X'.
///
/// `x` holds the images of the columns of `h.basis` (codomain_dim x dim H);
/// `xp` holds the images of the columns of `hp.basis` under X'
/// (domain_dim x dim H').
struct DualParrottProblem {
  Index domain_dim = 0;
  Index codomain_dim = 0;
  Subspace h;   // subspace of the domain
  Subspace hp;  // subspace of the codomain
  MatrixOp x;
  MatrixOp xp;

  /// ||hp^* X - X'^* h|| in operator norm; zero iff the pairing identity holds.
  double compatibility_residual() const;
};

struct DualParrottExtension {
  MatrixOp y;                        // codomain_dim x domain_dim
  double mu = 0.0;                   // max(||X||, ||X'||)
  double compatibility = 0.0;        // pairing residual of the input
  double extension_residual = 0.0;   // ||Y h_i - X h_i|| over the basis
  double coextension_residual = 0.0; // ||Y^* h'_j - X' h'_j|| over the basis
};

/// Builds the extension with norm max(||X||, ||X'||) using the central
/// Parrott corner. Throws Incompatible if the pairing identity fails.
DualParrottExtension dual_parrott_extend(const DualParrottProblem& p, const Tolerances& tol = {});

struct TriangularCompletion {
  MatrixOp x;  // D_{T2^*} C D_{T1}
  MatrixOp y;  // [[T1, 0], [X, T2]]
};

/// Synthesizes X = D_{T2^*} C D_{T1} and the contraction [[T1, 0], [X, T2]].
TriangularCompletion triangular_complete(const MatrixOp& t1, const MatrixOp& t2,
                                         const MatrixOp& c, const Tolerances& tol = {});

/// Recovers a contraction C with D_{T2^*} C D_{T1} = X from a contractive
/// lower-triangular block matrix [[T1, 0], [X, T2]].
/// Throws RangeViolation when X leaves the defect ranges and NotCompletable
/// when the block matrix is not a contraction.
MatrixOp triangular_extract(const MatrixOp& t1, const MatrixOp& t2, const MatrixOp& x,
                            const Tolerances& tol = {});

}  // namespace qlift

#pragma once

// Truncated Schaeffer dilations and co-isometric extensions.
//
// Every builder keeps a full copy of the base space per defect level, so a
// chain with base dimension d and N levels has dimension d (N + 1) (or
// d (2N + 1) for the bilateral unitary dilation). Block order is
//
//   one-sided:  [H, D_1, ..., D_N]
//   bilateral:  [D_{-N}, ..., D_{-1}, H, D_1, ..., D_N]
//
// Identities are exact on the interior window (every block except the
// truncation boundary); the boundary block carries the truncation error.

#include <string>

#include "qlift/linalg.hpp"

namespace qlift {

enum class DilationKind { Isometric, Coisometric, Unitary };

std::string to_string(DilationKind k);

struct ChainSpace {
  Index base_dim = 0;
  Index block_dim = 0;
  Index levels = 0;
  bool bilateral = false;

  Index total_dim() const;
  /// Number of blocks including the base block.
  Index block_count() const;
  /// Offset of the base space H.
  Index base_offset() const;
  BlockLayout layout() const;

  /// Orthogonal projection onto H and the first n levels (on both sides
  /// for bilateral chains). Throws LevelOutOfRange if n > levels.
  MatrixOp projection(Index n) const;
  /// Isometric embedding of H (total_dim x base_dim).
  MatrixOp base_embedding() const;
  /// Embeds an operator on H into the chain as P_H-supported matrix.
  MatrixOp embed_base(const MatrixOp& op_on_base) const;
  /// Compression P_H M |_H of an operator on the chain.
  MatrixOp compress_to_base(const MatrixOp& m) const;
};

/// A built dilation or extension together with its bookkeeping.
struct DilationBundle {
  MatrixOp op;
  ChainSpace chain;
  DilationKind kind = DilationKind::Isometric;
  MatrixOp source;         // the dilated or extended contraction
  Complex q_scale{1.0, 0.0};  // op dilates q_scale * source
};

/// Truncated Schaeffer isometric dilation: first block column (T, D_T),
/// identity subdiagonal. The final block column is the truncation boundary.
DilationBundle schaeffer_isometric(const MatrixOp& t, Index levels, const Tolerances& tol = {});

/// Co-isometric extension of T: adjoint of the Schaeffer dilation of T^*.
/// H is invariant and op|_H = T; the final block row is the boundary.
DilationBundle coisometric_extension(const MatrixOp& t, Index levels, const Tolerances& tol = {});

/// Bilateral unitary dilation with central coupling
/// [[T, D_{T^*}], [D_T, -T^*]] and `levels` shift blocks on each side.
DilationBundle unitary_dilation(const MatrixOp& t, Index levels, const Tolerances& tol = {});

/// Co-isometric extension of qT (the q V_q of the lifting theorems).
/// Throws QOutOfRange unless 0 < |q| ||T|| <= 1 + psd_tol.
DilationBundle q_scaled_coextension(const MatrixOp& t, Complex q, Index levels,
                                    const Tolerances& tol = {});

/// Schaeffer isometric dilation of qT, same range check.
DilationBundle q_scaled_isometric(const MatrixOp& t, Complex q, Index levels,
                                  const Tolerances& tol = {});

/// Smallest subspace containing H that is invariant under V and V^*.
Subspace minimal_reducing_subspace(const MatrixOp& v, const Subspace& h, const Tolerances& tol = {});

/// Projection P_n onto H and the first n levels of the bundle's chain.
MatrixOp chain_projection(const DilationBundle& b, Index n);

/// Interior-window projection: every block except the truncation boundary
/// (D_N for one-sided chains with N >= 1, H itself when N = 0; D_{-N} and
/// D_N for bilateral chains). On this window op^* op = I for isometric
/// bundles, op op^* = I for co-isometric ones and both for unitary ones.
MatrixOp interior_projection(const DilationBundle& b);

/// ||P (op^* op - I) P|| and ||P (op op^* - I) P|| on the interior window.
double interior_isometry_defect(const DilationBundle& b);
double interior_coisometry_defect(const DilationBundle& b);

}  // namespace qlift

#pragma once

// Dense complex matrix kernel used by every construction in the library:
// norms, PSD square roots, defect operators, tolerance-aware pseudoinverses,
// PSD ordering, block assembly and subspace bases.

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qlift/errors.hpp"

namespace qlift {

using Complex = std::complex<double>;
using Index = Eigen::Index;

/// Dense complex operator between finite-dimensional Hilbert spaces.
/// rows() is the codomain dimension, cols() the domain dimension.
using MatrixOp = Eigen::MatrixXcd;
using VectorOp = Eigen::VectorXcd;

struct Tolerances {
  double rank_tol = 1e-10;      // relative singular-value cutoff
  double psd_tol = 1e-10;       // negative-eigenvalue slack
  double residual_tol = 1e-8;   // identity residual budget (operator norm)

  /// Throws InvalidArgument unless every field lies in (0, 1).
  void validate() const;
};

/// Orthonormal basis (as columns) of a subspace of C^ambient_dim.
struct Subspace {
  Index ambient_dim = 0;
  MatrixOp basis;  // ambient_dim x dim

  Index dim() const { return basis.cols(); }
  /// Orthogonal projection onto the subspace, ambient_dim x ambient_dim.
  MatrixOp projection() const;
};

enum class DefectSide { Right, Left };

// -- elementary constructors --------------------------------------------

MatrixOp identity(Index n);
MatrixOp zeros(Index rows, Index cols);
/// Coordinate subspace spanned by e_begin, ..., e_{begin+count-1}.
Subspace coordinate_subspace(Index ambient_dim, Index begin, Index count);

// -- predicates -----------------------------------------------------------

bool all_finite(const MatrixOp& m);
void require_finite(const MatrixOp& m, const char* what);
void require_same_shape(const MatrixOp& a, const MatrixOp& b, const char* what);
double hermitian_defect(const MatrixOp& p);

// -- norms and spectral helpers -----------------------------------------

/// Largest singular value.
double operator_norm(const MatrixOp& m);
/// Singular values in decreasing order.
Eigen::VectorXd singular_values(const MatrixOp& m);
/// Smallest eigenvalue of a Hermitian matrix (symmetrized first).
double min_eigenvalue(const MatrixOp& hermitian);
/// sigma_max / sigma_min; +inf for singular input.
double condition_number(const MatrixOp& m);

/// Hermitian PSD square root. Eigenvalues in [-psd_tol, 0] are clamped.
/// Throws NotHermitian / NotPSD.
MatrixOp psd_sqrt(const MatrixOp& p, const Tolerances& tol = {});

/// D_T = (I - T^*T)^{1/2} (Right) or D_{T^*} = (I - TT^*)^{1/2} (Left).
/// Throws NotContraction if ||T|| > 1 + psd_tol.
MatrixOp defect(const MatrixOp& t, DefectSide side, const Tolerances& tol = {});

/// Moore-Penrose pseudoinverse; singular values <= rank_tol * sigma_max are
/// treated as exact zeros.
MatrixOp pinv(const MatrixOp& m, const Tolerances& tol = {});

/// A <= B in the Loewner order: min eig(B - A) >= -psd_tol.
/// Throws NotHermitian if either input is not Hermitian.
bool psd_leq(const MatrixOp& a, const MatrixOp& b, const Tolerances& tol = {});

// -- block matrices -------------------------------------------------------

/// A rectangular grid of blocks; std::nullopt is a zero placeholder whose
/// shape is inferred from its row and column.
using BlockGrid = std::vector<std::vector<std::optional<MatrixOp>>>;

/// Assembles a block matrix. Throws DimensionMismatch on inconsistent
/// blocks or when a placeholder's shape cannot be inferred.
MatrixOp assemble_blocks(const BlockGrid& grid);
/// Same, with explicit block row heights and column widths.
MatrixOp assemble_blocks(const BlockGrid& grid, const std::vector<Index>& row_dims,
                         const std::vector<Index>& col_dims);

/// Block-diagonal direct sum.
MatrixOp direct_sum(const std::vector<MatrixOp>& blocks);

/// Uniform block layout: `count` blocks of `size` following a leading block.
struct BlockLayout {
  std::vector<Index> sizes;

  Index total() const;
  Index offset(std::size_t block) const;
  Index size(std::size_t block) const { return sizes.at(block); }
  std::size_t count() const { return sizes.size(); }
};

MatrixOp extract_block(const MatrixOp& m, const BlockLayout& rows, const BlockLayout& cols,
                       std::size_t i, std::size_t j);

// -- subspaces -------------------------------------------------------------

/// Orthonormal basis for the column span of `vectors`, dropping directions
/// whose singular value is <= rank_tol * sigma_max.
Subspace orthonormalize(const MatrixOp& vectors, const Tolerances& tol = {});
/// Orthogonal complement of `s` inside C^ambient_dim.
Subspace orthogonal_complement(const Subspace& s, const Tolerances& tol = {});
/// Orthogonal complement of `s` inside the larger subspace `within`.
Subspace relative_complement(const Subspace& s, const Subspace& within,
                             const Tolerances& tol = {});

}  // namespace qlift

#pragma once

// Generators of q-commuting test data: the closed-form 2x2 family, a
// truncated weighted-shift model, q-commutant and intertwiner solvers, and
// seeded random sampling.

#include <cstdint>
#include <random>
#include <vector>

#include "qlift/lifting.hpp"

namespace qlift {

enum class Family { Jordan, Hardy, Random, Custom };

struct GeneratorSpec {
  Family family = Family::Random;
  Index dim = 2;
  Complex q{1.0, 0.0};
  std::uint64_t seed = 0;
  bool strict = false;  // force norm <= 1 - margin
  double margin = 1e-2;
  double norm = 1.0;    // target operator norm before the strict cap
  /// Throws InvalidArgument for dim < 1 and QOutOfRange for q = 0.
  void validate() const;
};

struct JordanPair {
  QPair raw;     // T1 = [[a, 0], [b, qa]], T2 = [[0, 0], [d, 0]]
  QPair scaled;  // T1 divided by scale
  double scale = 1.0;  // max(1, ||T1||)
};

JordanPair example_pair_jordan(Complex a, Complex b, Complex d, Complex q);

/// T2 = lower shift on C^n, T1 = diag(1, q, ..., q^{n-1}).
/// Throws QOutOfRange if |q| > 1 or q = 0, InvalidArgument if n < 2.
QPair hardy_pair_truncated(Complex q, Index n);

/// Trace-orthonormal basis of {X : T X = q X T}.
std::vector<MatrixOp> q_commutant_basis(const MatrixOp& t, Complex q, const Tolerances& tol = {});

/// Trace-orthonormal basis of {A : A T1 = q T2 A} (A maps the space of T1
/// to the space of T2).
std::vector<MatrixOp> intertwiner_basis(const MatrixOp& t1, const MatrixOp& t2, Complex q,
                                        const Tolerances& tol = {});

/// Complex Ginibre matrix with unit-variance entries.
MatrixOp ginibre(Index rows, Index cols, std::mt19937_64& rng);

/// Ginibre draw rescaled to norm spec.norm (capped at 1 - margin when strict).
MatrixOp random_contraction(const GeneratorSpec& spec);

/// q-commuting pair with T1 = P diag(lambda) P^-1 built from geometric
/// eigenvalue chains mu, q mu, q^2 mu, ... and T2 a random element of the
/// q-commutant. T1 is scaled so that max(1, |q|) ||T1|| <= 1.
QPair random_qpair(const GeneratorSpec& spec);

struct IntertwiningInstance {
  MatrixOp a;
  MatrixOp t1;
  MatrixOp t2;
  Complex q{1.0, 0.0};
};

/// Contractions T1, T2 with T1 = q A0^-1 T2 A0 and A a random element of the
/// intertwiner space scaled to ||A|| = a_norm.
IntertwiningInstance random_intertwining(const GeneratorSpec& spec, double a_norm = 0.8);

}  // namespace qlift

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qlift/dilation.hpp"

using namespace qlift;

namespace {

MatrixOp scalar(Complex z) {
  MatrixOp m(1, 1);
  m(0, 0) = z;
  return m;
}

MatrixOp contraction(Index d, double norm, std::mt19937_64& rng) {
  MatrixOp m = oracle::ginibre(d, d, rng);
  return m * (norm / oracle::power_norm(m));
}

MatrixOp power(const MatrixOp& m, Index k) {
  MatrixOp p = identity(m.rows());
  for (Index i = 0; i < k; ++i) p = p * m;
  return p;
}

double compression_error(const DilationBundle& b) {
  const MatrixOp src = b.q_scale * b.source;
  double worst = 0.0;
  for (Index k = 0; k <= b.chain.levels; ++k) {
    worst = std::max(worst, operator_norm(b.chain.compress_to_base(power(b.op, k)) - power(src, k)));
  }
  return worst;
}

}  // namespace

TEST(Schaeffer, ZeroGivesLowerShift) {
  const DilationBundle b = schaeffer_isometric(scalar(0.0), 2);
  MatrixOp shift = zeros(3, 3);
  shift(1, 0) = 1.0;
  shift(2, 1) = 1.0;
  EXPECT_EQ(b.op, shift);
  EXPECT_EQ(power(b.op, 3), zeros(3, 3));
}

TEST(Schaeffer, HalfAtDepthOne) {
  const DilationBundle b = schaeffer_isometric(scalar(0.5), 1);
  MatrixOp expected = zeros(2, 2);
  expected(0, 0) = 0.5;
  expected(1, 0) = std::sqrt(3.0) / 2.0;
  EXPECT_LE(operator_norm(b.op - expected), 1e-15);
}

TEST(Schaeffer, UnitaryDecouples) {
  MatrixOp u = zeros(2, 2);
  u(0, 1) = 1.0;
  u(1, 0) = Complex(0.0, 1.0);
  const DilationBundle b = schaeffer_isometric(u, 2);
  EXPECT_LE(operator_norm(b.op.block(2, 0, 4, 2)), 1e-15);
  EXPECT_EQ(b.op.topLeftCorner(2, 2), u);
}

TEST(Schaeffer, RejectsNonContraction) {
  try {
    schaeffer_isometric(scalar(1.5), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotContraction);
  }
}

TEST(Coisometric, ZeroGivesUpperShift) {
  const DilationBundle b = coisometric_extension(scalar(0.0), 2);
  MatrixOp shift = zeros(3, 3);
  shift(0, 1) = 1.0;
  shift(1, 2) = 1.0;
  EXPECT_EQ(b.op, shift);
  EXPECT_EQ(b.op(0, 0), Complex(0.0, 0.0));
}

TEST(Coisometric, HalfAtDepthOne) {
  const DilationBundle b = coisometric_extension(scalar(0.5), 1);
  MatrixOp expected = zeros(2, 2);
  expected(0, 0) = 0.5;
  expected(0, 1) = std::sqrt(3.0) / 2.0;
  EXPECT_LE(operator_norm(b.op - expected), 1e-15);
}

TEST(Coisometric, RestrictionIsExact) {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 100; ++k) {
    const Index d = 1 + Index(rng() % 4);
    const MatrixOp t = contraction(d, 0.95, rng);
    const DilationBundle b = coisometric_extension(t, 3);
    EXPECT_EQ(b.op.topLeftCorner(d, d), t);
    EXPECT_EQ(b.op.block(d, 0, 3 * d, d), zeros(3 * d, d));
  }
}

TEST(Unitary, ZeroAtDepthOne) {
  const DilationBundle b = unitary_dilation(scalar(0.0), 1);
  ASSERT_EQ(b.op.rows(), 3);
  // Blocks are [D_-1, H, D_1]; the truncation leaves a partial permutation.
  for (Index i = 0; i < 3; ++i) {
    int ones_in_row = 0;
    int ones_in_col = 0;
    for (Index j = 0; j < 3; ++j) {
      EXPECT_TRUE(b.op(i, j) == Complex(0.0, 0.0) || b.op(i, j) == Complex(1.0, 0.0));
      ones_in_row += b.op(i, j) == Complex(1.0, 0.0);
      ones_in_col += b.op(j, i) == Complex(1.0, 0.0);
    }
    EXPECT_LE(ones_in_row, 1);
    EXPECT_LE(ones_in_col, 1);
  }
  // Coupling [[T, D_{T*}], [D_T, -T*]] from (H, D_-1) to (H, D_1) with T = 0.
  const Index h = b.chain.base_offset();
  MatrixOp coupling(2, 2);
  coupling << b.op(h, h), b.op(h, h - 1), b.op(h + 1, h), b.op(h + 1, h - 1);
  MatrixOp expected(2, 2);
  expected << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
  EXPECT_EQ(coupling, expected);
}

TEST(Unitary, HalfSquaredCompression) {
  const DilationBundle b = unitary_dilation(scalar(0.5), 2);
  EXPECT_NEAR(std::abs(b.chain.compress_to_base(b.op * b.op)(0, 0) - 0.25), 0.0, 1e-12);
}

TEST(Unitary, UnitaryInputDecouples) {
  MatrixOp u = scalar(Complex(0.6, 0.8));
  const DilationBundle b = unitary_dilation(u, 2);
  const Index h = b.chain.base_offset();
  EXPECT_LE(std::abs(b.op(h, h) - u(0, 0)), 1e-15);
  for (Index i = 0; i < b.op.rows(); ++i) {
    if (i == h) continue;
    EXPECT_LE(std::abs(b.op(i, h)), 1e-15);
    EXPECT_LE(std::abs(b.op(h, i)), 1e-15);
  }
}

TEST(Unitary, PositiveAndNegativePowers) {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 20; ++k) {
    const MatrixOp t = contraction(2, 0.9, rng);
    const DilationBundle b = unitary_dilation(t, 3);
    EXPECT_LE(compression_error(b), 1e-10);
    for (Index n = 0; n <= 3; ++n) {
      const MatrixOp back = b.chain.compress_to_base(power(b.op.adjoint(), n));
      EXPECT_LE(operator_norm(back - power(t.adjoint(), n)), 1e-10);
    }
    EXPECT_LE(interior_isometry_defect(b), 1e-10);
    EXPECT_LE(interior_coisometry_defect(b), 1e-10);
  }
}

TEST(Bundles, CompressionAndInteriorDefects) {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 50; ++k) {
    const Index d = 1 + Index(rng() % 4);
    const Index n = Index(rng() % 6);
    const MatrixOp t = contraction(d, 0.99, rng);
    const DilationBundle iso = schaeffer_isometric(t, n);
    const DilationBundle co = coisometric_extension(t, n);
    EXPECT_LE(compression_error(iso), 1e-10);
    EXPECT_LE(compression_error(co), 1e-10);
    EXPECT_LE(interior_isometry_defect(iso), 1e-10);
    EXPECT_LE(interior_coisometry_defect(co), 1e-10);
  }
}

TEST(QScaled, UnitScaleMatchesPlainExtension) {
  std::mt19937_64 rng(44);
  const MatrixOp t = contraction(3, 0.8, rng);
  EXPECT_EQ(q_scaled_coextension(t, 1.0, 3).op, coisometric_extension(t, 3).op);
}

TEST(QScaled, BoundaryOfRangeAllowed) {
  std::mt19937_64 rng(45);
  const MatrixOp t = contraction(2, 0.5, rng);
  const DilationBundle b = q_scaled_coextension(t, 2.0, 2);
  EXPECT_NEAR(operator_norm(b.q_scale * b.source), 1.0, 1e-12);
  EXPECT_EQ(b.q_scale, Complex(2.0, 0.0));
}

TEST(QScaled, OutOfRange) {
  try {
    q_scaled_coextension(scalar(1.0), 1.5, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::QOutOfRange);
  }
  EXPECT_THROW(q_scaled_isometric(scalar(0.5), 0.0, 2), Error);
}

TEST(ReducingSubspace, DiagonalOperator) {
  MatrixOp v = zeros(3, 3);
  v(0, 0) = 0.5;
  v(1, 1) = 0.25;
  v(2, 2) = -1.0;
  const Subspace r = minimal_reducing_subspace(v, coordinate_subspace(3, 0, 1));
  EXPECT_EQ(r.dim(), 1);
  EXPECT_LE(operator_norm(r.projection() - coordinate_subspace(3, 0, 1).projection()), 1e-14);
}

TEST(ReducingSubspace, RotationIsIrreducible) {
  MatrixOp v(2, 2);
  const double c = std::cos(0.3), s = std::sin(0.3);
  v << c, -s, s, c;
  EXPECT_EQ(minimal_reducing_subspace(v, coordinate_subspace(2, 0, 1)).dim(), 2);
}

TEST(ReducingSubspace, MatchesOrbitClosure) {
  std::mt19937_64 rng(46);
  for (int k = 0; k < 20; ++k) {
    const Index a = 1 + Index(rng() % 3);
    const Index b = 1 + Index(rng() % 3);
    const MatrixOp v = direct_sum({oracle::ginibre(a, a, rng), oracle::ginibre(b, b, rng)});
    const bool first = (rng() % 2) == 0;
    const Index start = first ? 0 : a;
    const Subspace r = minimal_reducing_subspace(v, coordinate_subspace(a + b, start, 1));
    const std::vector<bool> closure = oracle::orbit_closure(v, {int(start)});
    MatrixOp expected = zeros(a + b, a + b);
    for (Index i = 0; i < a + b; ++i) expected(i, i) = closure[std::size_t(i)] ? 1.0 : 0.0;
    EXPECT_LE(operator_norm(r.projection() - expected), 1e-9);
    const MatrixOp p = r.projection();
    EXPECT_LE(operator_norm(v * p - p * v * p), 1e-9);
    EXPECT_LE(operator_norm(v.adjoint() * p - p * v.adjoint() * p), 1e-9);
  }
}

TEST(ChainProjection, Endpoints) {
  std::mt19937_64 rng(47);
  const DilationBundle b = coisometric_extension(contraction(2, 0.7, rng), 3);
  EXPECT_EQ(chain_projection(b, 3), identity(8));
  EXPECT_EQ(chain_projection(b, 0), b.chain.embed_base(identity(2)));
  try {
    chain_projection(b, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LevelOutOfRange);
  }
}

TEST(ChainProjection, ShiftsUnderAdjoint) {
  std::mt19937_64 rng(48);
  for (int k = 0; k < 20; ++k) {
    const Index d = 1 + Index(rng() % 3);
    const MatrixOp t = contraction(d, 0.45, rng);
    for (const DilationBundle& b : {coisometric_extension(t, 4), q_scaled_coextension(t, Complex(0.0, 2.0), 4)}) {
      const MatrixOp vs = b.op.adjoint();
      for (Index n = 0; n < 4; ++n) {
        EXPECT_LE(operator_norm(chain_projection(b, n + 1) * vs - vs * chain_projection(b, n)), 1e-10);
      }
    }
  }
}

TEST(ChainProjection, ProjectionsAreHermitianIdempotents) {
  std::mt19937_64 rng(49);
  const DilationBundle b = unitary_dilation(contraction(2, 0.7, rng), 3);
  for (Index n = 0; n <= 3; ++n) {
    const MatrixOp p = chain_projection(b, n);
    EXPECT_EQ(p * p, p);
    EXPECT_EQ(p.adjoint(), p);
  }
}

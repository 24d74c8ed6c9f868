#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qlift/dilation.hpp"
#include "qlift/lifting.hpp"
#include "qlift/qalgebra.hpp"

using namespace qlift;

namespace {

MatrixOp scalar(Complex z) {
  MatrixOp m(1, 1);
  m(0, 0) = z;
  return m;
}

QPair example_pair(Complex q) { return example_pair_jordan(1.0, 0.5, 0.25, q).scaled; }

QPair random_pair(Complex q, std::uint64_t seed, Index dim = 3) {
  GeneratorSpec spec;
  spec.dim = dim;
  spec.q = q;
  spec.seed = seed;
  return random_qpair(spec);
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::InvalidArgument;
}

double residual(const LiftResult& r, const std::string& label) {
  const CheckRecord* c = r.certificate.find(label);
  EXPECT_NE(c, nullptr) << label;
  return c ? c->residual : INFINITY;
}

}  // namespace

TEST(QPart, IdentityIntertwiner) {
  std::mt19937_64 rng(51);
  const DilationBundle b = schaeffer_isometric(oracle::ginibre(2, 2, rng) * 0.3, 1);
  const MatrixOp t = b.op.topLeftCorner(2, 2);
  const MatrixOp s = b.op.bottomLeftCorner(2, 2);
  const LiftResult r = qpart_step(t, t, s, s, identity(2));
  EXPECT_LE(operator_norm(r.op - identity(4)), 1e-8);
  EXPECT_TRUE(r.certificate.all_pass());
}

TEST(QPart, ScalarShiftExample) {
  const LiftResult r = qpart_step(scalar(0.0), scalar(0.0), scalar(1.0), scalar(1.0), scalar(1.0));
  EXPECT_LE(operator_norm(r.op - identity(2)), 1e-12);
}

TEST(QPart, RandomFeasibleSquare) {
  // A commuting square from a q-pair: T2 (qT1) = T1 T2 with the Schaeffer
  // columns of qT1 and T1.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const QPair p = random_pair(Complex(0.0, 1.0), seed);
    const Index d = p.t1.rows();
    const DilationBundle v = schaeffer_isometric(p.t1, 1);
    const DilationBundle vq = q_scaled_isometric(p.t1, p.q, 1);
    const LiftResult r = qpart_step(vq.op.topLeftCorner(d, d), v.op.topLeftCorner(d, d),
                                    vq.op.bottomLeftCorner(d, d), v.op.bottomLeftCorner(d, d), p.t2);
    EXPECT_LE(residual(r, "Y V = V' Y"), 1e-8);
    EXPECT_LE(residual(r, "||op|| = ||T2||"), 1e-8);
  }
}

TEST(QPart, NamesTheFailingHypothesis) {
  try {
    qpart_step(scalar(0.5), scalar(0.5), scalar(0.5), scalar(0.5), scalar(0.5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::HypothesisViolated);
    EXPECT_NE(std::string(e.what()).find("T^*T + S^*S = I"), std::string::npos);
  }
}

TEST(IsometricLift, ZeroT2) {
  const QPair p{scalar(0.5), scalar(0.0), 1.0};
  const LiftResult r = isometric_lift_q(p, 3);
  EXPECT_EQ(operator_norm(r.op), 0.0);
  EXPECT_EQ(r.certificate.max_residual(), 0.0);
}

TEST(IsometricLift, ClassicalCommutingScalars) {
  const LiftResult r = isometric_lift_q({scalar(0.5), scalar(0.5), 1.0}, 4);
  EXPECT_TRUE(r.certificate.all_pass());
  EXPECT_LE(residual(r, "V W = q W V_q"), 1e-8);
  EXPECT_LE(residual(r, "||op|| = ||T2||"), 1e-8);
  EXPECT_LE(residual(r, "W^*|_H = T2^*"), 1e-10);
}

TEST(IsometricLift, ExamplePairAtUnitImaginaryQ) {
  const LiftResult r = isometric_lift_q(example_pair(Complex(0.0, 1.0)), 5);
  EXPECT_TRUE(r.certificate.all_pass());
  EXPECT_LE(residual(r, "V W = q W V_q"), 1e-8);
  EXPECT_LE(residual(r, "W^*|_H = T2^*"), 1e-10);
}

TEST(IsometricLift, EveryDepthEveryLevel) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const QPair p = random_pair(seed % 3 == 0 ? Complex(1.3, 0.4) : Complex(0.4, -0.6), seed);
    for (Index n = 0; n <= 4; ++n) {
      const LiftResult r = isometric_lift_q(p, n);
      for (const CheckRecord& c : r.certificate.checks) {
        EXPECT_LE(c.residual, 1e-8) << c.label << " at depth " << n;
      }
    }
  }
}

TEST(CoisoLift, ZeroT2) {
  const LiftResult r = coiso_lift_q({scalar(0.5), scalar(0.0), Complex(0.0, 1.0)}, 3);
  EXPECT_EQ(operator_norm(r.op), 0.0);
}

TEST(CoisoLift, UnitQHasTheSameChecks) {
  const LiftResult a = coiso_lift_q(random_pair(1.0, 3), 3);
  const LiftResult b = coiso_lift_q(random_pair(Complex(0.5, 0.5), 3), 3);
  ASSERT_EQ(a.certificate.checks.size(), b.certificate.checks.size());
  for (std::size_t i = 0; i < a.certificate.checks.size(); ++i) {
    EXPECT_EQ(a.certificate.checks[i].label, b.certificate.checks[i].label);
  }
  EXPECT_TRUE(a.certificate.all_pass());
}

TEST(CoisoLift, PerLevelNormAndRestriction) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const QPair p = random_pair(Complex(0.3, 0.8), seed);
    const LiftResult r = coiso_lift_q(p, 4);
    EXPECT_TRUE(r.certificate.all_pass());
    EXPECT_LE(residual(r, "op|_H = T2"), 1e-12);
    for (Index n = 1; n <= 4; ++n) {
      EXPECT_LE(residual(r, "level " + std::to_string(n) + ": per-level identity"), 1e-8);
      EXPECT_LE(residual(r, "level " + std::to_string(n) + ": norm"), 1e-8);
    }
    EXPECT_EQ(r.certificate.reported.count("boundary: V Y = q Y V_q"), 1u);
  }
}

TEST(CoisoLift, AgreesWithIsometricEngineOnAdjointData) {
  // For |q| = 1 the adjoint data (T1^*, T2^*) q-commute with the same q.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const QPair p = random_pair(Complex(0.6, 0.8), seed);
    const LiftResult co = coiso_lift_q(p, 4);
    const LiftResult iso = isometric_lift_q({p.t1.adjoint(), p.t2.adjoint(), p.q}, 4);
    EXPECT_NEAR(co.norm_claim.achieved, iso.norm_claim.achieved, 1e-7);
    EXPECT_LE(residual(co, "V Y = q Y V_q"), 1e-7);
    EXPECT_LE(residual(iso, "V W = q W V_q"), 1e-7);
    // Both restrict to T2 (resp. T2^*) on the base block.
    const Index d = p.t1.rows();
    EXPECT_LE(operator_norm(co.op.topLeftCorner(d, d) - iso.op.topLeftCorner(d, d).adjoint()), 1e-7);
  }
}

TEST(QCommutantLift, ExtendsT1WhenT2EqualsT1) {
  std::mt19937_64 rng(52);
  MatrixOp t = oracle::ginibre(2, 2, rng);
  t *= 0.7 / oracle::power_norm(t);
  const LiftResult r = qcommutant_lift({t, t, 1.0}, 4);
  EXPECT_TRUE(r.certificate.all_pass());
  EXPECT_LE(operator_norm(r.op.topLeftCorner(2, 2) - t), 1e-12);
  EXPECT_LE(residual(r, "V S = q S V"), 1e-8);
}

TEST(QCommutantLift, ZeroT2) {
  EXPECT_EQ(operator_norm(qcommutant_lift({scalar(0.5), scalar(0.0), 0.5}, 3).op), 0.0);
}

TEST(QCommutantLift, ExamplePairAtHalf) {
  const LiftResult r = qcommutant_lift(example_pair(0.5), 5);
  EXPECT_TRUE(r.certificate.all_pass());
}

TEST(QCommutantLift, RejectsLargeQ) {
  EXPECT_EQ(code_of([] { qcommutant_lift({scalar(0.25), scalar(0.1), 2.0}, 2); }), ErrorCode::QOutOfRange);
}

TEST(AdjointLift, ZeroX) {
  EXPECT_EQ(operator_norm(adjoint_lift_q(scalar(0.5), scalar(0.0), Complex(0.0, 1.0), 3).op), 0.0);
}

TEST(AdjointLift, UnitQIsACommutantLift) {
  const LiftResult r = adjoint_lift_q(scalar(0.5), scalar(0.3), 1.0, 4);
  EXPECT_TRUE(r.certificate.all_pass());
  EXPECT_LE(residual(r, "Y^*|_H = X^*"), 1e-10);
}

TEST(AdjointLift, EqualsAdjointOfReducedLift) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const QPair p = random_pair(Complex(0.8, -0.6), seed);
    // q T X = X T with T = T1, X = T2 and q = 1/p.q.
    const Complex q = 1.0 / p.q;
    const LiftResult y = adjoint_lift_q(p.t1, p.t2, q, 4);
    const LiftResult z = coiso_lift_q({p.t1.adjoint(), p.t2.adjoint(), std::conj(q)}, 4);
    EXPECT_LE(operator_norm(y.op - z.op.adjoint()), 1e-9);
  }
}

TEST(AdjointLift, RejectsNonIntertwiningData) {
  MatrixOp t = zeros(2, 2);
  t(0, 0) = 0.5;
  MatrixOp x = zeros(2, 2);
  x(0, 1) = 0.5;
  x(1, 0) = 0.5;
  EXPECT_EQ(code_of([&] { adjoint_lift_q(t, x, 1.0, 2); }), ErrorCode::NotQCommuting);
}

TEST(UnitaryLift, ZeroT2) {
  const LiftResult r = unitary_q_lift({scalar(0.5), scalar(0.0), 1.0}, 2);
  EXPECT_EQ(operator_norm(r.op), 0.0);
  EXPECT_EQ(r.certificate.max_residual(), 0.0);
}

TEST(UnitaryLift, ClassicalCommutant) {
  const LiftResult r = unitary_q_lift({scalar(0.5), scalar(0.5), 1.0}, 3);
  EXPECT_TRUE(r.certificate.all_pass());
}

TEST(UnitaryLift, ExamplePairPowerCompressions) {
  const QPair p = example_pair(Complex(0.0, 1.0));
  const LiftResult r = unitary_q_lift(p, 4);
  EXPECT_TRUE(r.certificate.all_pass());
  for (Index n = 0; n <= 4; ++n) {
    const std::string k = std::to_string(n);
    EXPECT_LE(residual(r, "P_H U^" + k + " S|_H = T1^" + k + " T2"), 1e-8);
    EXPECT_LE(residual(r, "P_H S U_q^" + k + "|_H = T2 T1^" + k), 1e-8);
  }
  // Independent evaluation of the n = 4 compression against T1^4 T2.
  const DilationBundle u = unitary_dilation(p.t1, 4);
  MatrixOp un = identity(u.op.rows());
  for (int i = 0; i < 4; ++i) un = un * u.op;
  const MatrixOp e = u.chain.base_embedding();
  MatrixOp t14 = identity(2);
  for (int i = 0; i < 4; ++i) t14 = t14 * p.t1;
  EXPECT_LE(operator_norm(e.adjoint() * un * r.op * e - t14 * p.t2), 1e-8);
}

TEST(Lifts, MonotoneConsistency) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const QPair p = random_pair(Complex(0.7, 0.1), seed, 2);
    for (Index n = 1; n <= 4; ++n) {
      const Index m = 2 * n;
      const LiftResult iso_hi = isometric_lift_q(p, n);
      const LiftResult iso_lo = isometric_lift_q(p, n - 1);
      EXPECT_LE(operator_norm(iso_hi.op.topLeftCorner(m, m) - iso_lo.op), 1e-10);
      const LiftResult co_hi = coiso_lift_q(p, n);
      const LiftResult co_lo = coiso_lift_q(p, n - 1);
      EXPECT_LE(operator_norm(co_hi.op.topLeftCorner(m, m) - co_lo.op), 1e-10);
    }
  }
}

TEST(Lifts, HypothesisGates) {
  const QPair big{scalar(0.8), scalar(0.1), 3.0};
  EXPECT_EQ(code_of([&] { isometric_lift_q(big, 2); }), ErrorCode::QOutOfRange);
  EXPECT_EQ(code_of([&] { coiso_lift_q(big, 2); }), ErrorCode::QOutOfRange);
  EXPECT_EQ(code_of([&] { unitary_q_lift(big, 2); }), ErrorCode::QOutOfRange);
  MatrixOp t1 = zeros(2, 2);
  t1(0, 0) = 0.5;
  MatrixOp t2 = zeros(2, 2);
  t2(0, 1) = 0.5;
  EXPECT_EQ(code_of([&] { isometric_lift_q({t1, t2, 1.0}, 2); }), ErrorCode::NotQCommuting);
  EXPECT_EQ(code_of([&] { coiso_lift_q({scalar(0.5), scalar(0.5), 0.0}, 2); }), ErrorCode::QOutOfRange);
  try {
    isometric_lift_q(big, 2);
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("requires 0<|q|<=1/||T1||"), std::string::npos);
  }
}

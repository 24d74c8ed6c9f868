#include <gtest/gtest.h>

#include <cstdlib>

#include "qlift/qalgebra.hpp"
#include "qlift_cli/io.hpp"
#include "qlift_cli/run.hpp"

using namespace qlift;
using namespace qlift::cli;

namespace {

Json example_pair_json(Complex q) {
  return pair_to_json(example_pair_jordan(1.0, 0.5, 0.25, q).scaled);
}

const Json* find_check(const Json& report, const std::string& label) {
  for (const Json& c : report.at("checks")) {
    if (c.at("label") == label) return &c;
  }
  return nullptr;
}

}  // namespace

TEST(ParseQ, Forms) {
  EXPECT_EQ(parse_q("0,1"), Complex(0.0, 1.0));
  EXPECT_EQ(parse_q("1@90"), Complex(0.0, 1.0));
  EXPECT_EQ(parse_q("2@180"), Complex(-2.0, 0.0));
  EXPECT_EQ(parse_q("0.5"), Complex(0.5, 0.0));
  EXPECT_NEAR(std::abs(parse_q("1@45") - std::polar(1.0, std::acos(-1.0) / 4.0)), 0.0, 1e-15);
  EXPECT_THROW(parse_q("abc"), Error);
  EXPECT_THROW(parse_q("1,2,3"), Error);
}

TEST(MatrixJson, RoundTripIsBitExact) {
  std::mt19937_64 rng(81);
  const MatrixOp m = ginibre(3, 2, rng);
  const Json j = to_json(m);
  EXPECT_EQ(j.at("rows"), 3);
  EXPECT_EQ(j.at("cols"), 2);
  EXPECT_EQ(j.at("data").size(), 6u);
  const MatrixOp back = matrix_from_json(Json::parse(dump(j)));
  EXPECT_EQ(back, m);
}

TEST(MatrixJson, RejectsMalformedInput) {
  const Json bad = Json::parse(R"({"rows": 2, "cols": 2, "data": [[1, 0]]})");
  EXPECT_THROW(matrix_from_json(bad), Error);
}

TEST(PairJson, RoundTrip) {
  const QPair p = example_pair_jordan(1.0, 0.5, 0.25, Complex(0.0, 1.0)).scaled;
  const QPair back = pair_from_json(pair_to_json(p));
  EXPECT_EQ(back.t1, p.t1);
  EXPECT_EQ(back.t2, p.t2);
  EXPECT_EQ(back.q, p.q);
}

TEST(Run, ExamplePairIsometricLift) {
  RunConfig c;
  c.command = "lift";
  c.engine = "isometric";
  c.q = Complex(0.0, 1.0);
  c.depth = 5;
  c.input_json = example_pair_json(Complex(0.0, 1.0));
  const RunOutcome out = execute(c);
  EXPECT_EQ(out.status, kAllPass) << out.diagnostic;
  for (const char* label : {"V W = q W V_q", "||op|| = ||T2||", "W^*|_H = T2^*"}) {
    const Json* check = find_check(out.report, label);
    ASSERT_NE(check, nullptr) << label;
    EXPECT_TRUE(check->at("pass").get<bool>()) << label;
  }
  EXPECT_EQ(out.report.at("construction"), "isometric_lift_q");
  EXPECT_TRUE(out.report.contains("tolerances"));
  EXPECT_TRUE(out.report.contains("version"));
}

TEST(Run, QBoundGate) {
  QPair p;
  p.t1 = identity(1);
  p.t2 = identity(1) * 0.5;
  p.q = 1.0;
  RunConfig c;
  c.command = "lift";
  c.q = Complex(3.0, 0.0);
  c.input_json = pair_to_json(p);
  const RunOutcome out = execute(c);
  EXPECT_EQ(out.status, kInvalidInput);
  EXPECT_NE(out.diagnostic.find("requires 0<|q|<=1/||T1||"), std::string::npos) << out.diagnostic;
}

TEST(Run, FailingCheckExitsOne) {
  RunConfig c;
  c.command = "verify";
  QPair p{identity(2), identity(2), 2.0};
  c.input_json = pair_to_json(p);
  EXPECT_EQ(execute(c).status, kCheckFailed);
}

TEST(Run, UnknownCommand) {
  RunConfig c;
  c.command = "frobnicate";
  EXPECT_EQ(execute(c).status, kInvalidInput);
}

TEST(Run, GenIsDeterministic) {
  RunConfig c;
  c.command = "gen";
  c.seed = 5;
  c.q = Complex(0.0, 1.0);
  EXPECT_EQ(dump(execute(c).report), dump(execute(c).report));
}

TEST(Run, EveryCommandOnGeneratedData) {
  RunConfig g;
  g.command = "gen";
  g.seed = 3;
  g.dim = 2;
  g.q = Complex(0.0, 1.0);
  const RunOutcome gen = execute(g);
  ASSERT_EQ(gen.status, kAllPass) << gen.diagnostic;
  for (const char* engine : {"isometric", "coiso", "commutant", "adjoint", "unitary"}) {
    RunConfig c;
    c.command = "lift";
    c.engine = engine;
    c.depth = 3;
    c.input_json = gen.report;
    const RunOutcome out = execute(c);
    EXPECT_EQ(out.status, kAllPass) << engine << " " << out.diagnostic;
  }
  for (const char* kind : {"isometric", "coisometric", "unitary"}) {
    RunConfig c;
    c.command = "dilate";
    c.kind = kind;
    c.depth = 3;
    c.input_json = gen.report;
    EXPECT_EQ(execute(c).status, kAllPass) << kind;
  }
  for (Index pad : {0, 1, 2}) {
    RunConfig c;
    c.command = "coextend";
    c.pad = pad;
    c.depth = 3;
    c.input_json = gen.report;
    const RunOutcome out = execute(c);
    EXPECT_EQ(out.status, kAllPass) << pad << " " << out.diagnostic;
  }
}

TEST(Run, IntertwiningRequiresUnimodularQ) {
  RunConfig g;
  g.command = "gen";
  g.family = "intertwining";
  g.dim = 2;
  g.q = Complex(0.0, 1.0);
  const RunOutcome gen = execute(g);
  ASSERT_EQ(gen.status, kAllPass) << gen.diagnostic;
  RunConfig c;
  c.command = "coextend";
  c.mode = "intertwining";
  c.input_json = gen.report;
  EXPECT_EQ(execute(c).status, kAllPass);
  c.q = Complex(0.5, 0.0);
  const RunOutcome bad = execute(c);
  EXPECT_EQ(bad.status, kInvalidInput);
  EXPECT_NE(bad.diagnostic.find("QNotUnimodular"), std::string::npos) << bad.diagnostic;
}

TEST(Environment, ResidualToleranceOverride) {
  ::setenv("QLIFT_TOL_RESIDUAL", "1e-6", 1);
  EXPECT_DOUBLE_EQ(tolerances_from_env(Tolerances{}).residual_tol, 1e-6);
  ::setenv("QLIFT_TOL_RESIDUAL", "loose", 1);
  EXPECT_THROW(tolerances_from_env(Tolerances{}), Error);
  ::unsetenv("QLIFT_TOL_RESIDUAL");
  EXPECT_DOUBLE_EQ(tolerances_from_env(Tolerances{}).residual_tol, Tolerances{}.residual_tol);
}

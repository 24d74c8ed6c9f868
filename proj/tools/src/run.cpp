#include "qlift_cli/run.hpp"

#include <cstdlib>
#include <ostream>

#include "qlift_cli/suite.hpp"

namespace qlift::cli {

namespace {

Json load_input(const RunConfig& c) {
  if (c.input_json) return *c.input_json;
  if (c.input.empty()) fail(ErrorCode::InvalidArgument, c.command + " needs --input");
  return Json::parse(read_text(c.input));
}

Json config_echo(const RunConfig& c) {
  Json j = {{"command", c.command}};
  j["q"] = c.q ? to_json(*c.q) : Json();
  j["seed"] = c.seed;
  if (c.command == "gen") {
    j["family"] = c.family;
    j["dim"] = c.dim;
  } else if (c.command == "dilate") {
    j["kind"] = c.kind;
    j["depth"] = c.depth;
  } else if (c.command == "lift") {
    j["engine"] = c.engine;
    j["depth"] = c.depth;
  } else if (c.command == "coextend") {
    j["mode"] = c.mode;
    j["depth"] = c.depth;
    j["copies"] = c.copies;
    j["pad"] = c.pad;
  }
  if (!c.input.empty()) j["input"] = c.input;
  return j;
}

Json report_for(const RunConfig& c, const Certificate& cert) {
  Json body = to_json(cert);
  Json r = {{"construction", cert.construction},
            {"version", QLIFT_VERSION_STRING},
            {"config", config_echo(c)},
            {"tolerances", to_json(c.tol)}};
  for (auto it = body.begin(); it != body.end(); ++it) {
    if (it.key() != "construction") r[it.key()] = it.value();
  }
  return r;
}

void merge_checks(Certificate& into, const Certificate& from, const std::string& prefix = "") {
  for (CheckRecord c : from.checks) {
    c.label = prefix + c.label;
    into.checks.push_back(c);
  }
  for (const auto& [k, v] : from.reported) into.reported[prefix + k] = v;
  for (const auto& [k, v] : from.norms) into.norms[prefix + k] = v;
  for (const auto& [k, v] : from.condition_numbers) into.condition_numbers[prefix + k] = v;
  for (const auto& [k, v] : from.depths) into.depths[prefix + k] = v;
}

QPair input_pair(const RunConfig& c) {
  QPair p = pair_from_json(load_input(c));
  if (c.q) p.q = *c.q;
  return p;
}

RunOutcome gen(const RunConfig& c) {
  GeneratorSpec spec;
  spec.dim = c.dim;
  spec.seed = c.seed;
  spec.q = c.q.value_or(Complex(1.0, 0.0));
  Json out;
  QPair p;
  if (c.family == "jordan") {
    const JordanPair jp = example_pair_jordan(c.a, c.b, c.d, spec.q);
    p = jp.scaled;
    out = pair_to_json(p);
    out["scale"] = jp.scale;
  } else if (c.family == "hardy") {
    p = hardy_pair_truncated(spec.q, c.dim);
    out = pair_to_json(p);
  } else if (c.family == "random") {
    p = random_qpair(spec);
    out = pair_to_json(p);
  } else if (c.family == "intertwining") {
    const IntertwiningInstance inst = random_intertwining(spec);
    p = {inst.t1, inst.t2, inst.q};
    out = pair_to_json(p);
    out["A"] = to_json(inst.a);
  } else {
    fail(ErrorCode::InvalidArgument, "unknown family '" + c.family + "'");
  }
  out["family"] = c.family;
  Certificate cert;
  if (c.family == "intertwining") {
    const MatrixOp a = matrix_from_json(out["A"]);
    cert.construction = "check_intertwining";
    cert.tolerances = c.tol;
    cert.add("A T1 = q T2 A", operator_norm(a * p.t1 - p.q * p.t2 * a) / (1.0 + operator_norm(a)),
             Window::Full);
  } else {
    cert = check_q_commuting(p.t1, p.t2, p.q, c.tol);
  }
  out["certificate"] = to_json(cert);
  return {cert.all_pass() ? kAllPass : kCheckFailed, out, ""};
}

RunOutcome dilate(const RunConfig& c) {
  const Json in = load_input(c);
  const MatrixOp t = in.contains("T1") ? matrix_from_json(in.at("T1")) : matrix_from_json(in);
  DilationBundle b;
  if (c.kind == "isometric") {
    b = schaeffer_isometric(t, c.depth, c.tol);
  } else if (c.kind == "coisometric") {
    b = coisometric_extension(t, c.depth, c.tol);
  } else if (c.kind == "unitary") {
    b = unitary_dilation(t, c.depth, c.tol);
  } else {
    fail(ErrorCode::InvalidArgument, "unknown dilation kind '" + c.kind + "'");
  }
  Certificate cert = check_dilation_identity(b, c.depth, c.tol);
  cert.construction = "dilate:" + c.kind;
  if (b.kind != DilationKind::Coisometric) {
    cert.add("V^* V = I", interior_isometry_defect(b), Window::Interior);
  }
  if (b.kind != DilationKind::Isometric) {
    cert.add("V V^* = I", interior_coisometry_defect(b), Window::Interior);
  }
  Json r = report_for(c, cert);
  r["dimension"] = b.op.rows();
  return {cert.all_pass() ? kAllPass : kCheckFailed, r, ""};
}

RunOutcome lift(const RunConfig& c) {
  const QPair p = input_pair(c);
  LiftResult res;
  if (c.engine == "isometric") {
    res = isometric_lift_q(p, c.depth, c.tol);
  } else if (c.engine == "coiso") {
    res = coiso_lift_q(p, c.depth, c.tol);
  } else if (c.engine == "commutant") {
    res = qcommutant_lift(p, c.depth, c.tol);
  } else if (c.engine == "adjoint") {
    // T1 T2 = q T2 T1 is (1/q) T X = X T with T = T1, X = T2.
    res = adjoint_lift_q(p.t1, p.t2, 1.0 / p.q, c.depth, c.tol);
  } else if (c.engine == "unitary") {
    res = unitary_q_lift(p, c.depth, c.tol);
  } else {
    fail(ErrorCode::InvalidArgument, "unknown engine '" + c.engine + "'");
  }
  const Certificate audit = check_lift(res, c.tol);
  Json r = report_for(c, res.certificate);
  r["audit_pass"] = audit.all_pass();
  const bool ok = res.certificate.all_pass() && audit.all_pass();
  return {ok ? kAllPass : kCheckFailed, r, ""};
}

RunOutcome coextend(const RunConfig& c) {
  const Json in = load_input(c);
  Certificate cert;
  if (c.mode == "triple") {
    const QPair p = input_pair(c);
    CoextensionTriple t = q_coextension(p, c.depth, c.copies, c.tol);
    if (c.pad < 0 || c.pad > 2) fail(ErrorCode::InvalidArgument, "--pad takes 0, 1 or 2");
    std::vector<DilationBundle> extra;
    for (Index k = 0; k < c.pad; ++k) extra.push_back(coisometric_extension(p.t1, c.depth, c.tol));
    if (!extra.empty()) t = pad_coextension(t, extra, c.tol);
    cert = t.certificate;
  } else if (c.mode == "intertwining") {
    if (!in.contains("A")) fail(ErrorCode::InvalidArgument, "intertwining input needs A");
    const QPair p = input_pair(c);
    const MatrixOp a = matrix_from_json(in.at("A"));
    cert = q_intertwining_coextension(a, p.t1, p.t2, p.q, c.depth, c.copies, c.tol).certificate;
  } else {
    fail(ErrorCode::InvalidArgument, "unknown coextension mode '" + c.mode + "'");
  }
  return {cert.all_pass() ? kAllPass : kCheckFailed, report_for(c, cert), ""};
}

RunOutcome verify_pair(const RunConfig& c) {
  const Json in = load_input(c);
  const QPair p = input_pair(c);
  Certificate cert;
  cert.construction = "verify";
  cert.tolerances = c.tol;
  if (in.contains("A")) {
    const MatrixOp a = matrix_from_json(in.at("A"));
    if (a.rows() != p.t2.rows() || a.cols() != p.t1.rows()) {
      fail(ErrorCode::DimensionMismatch, "A must map the space of T1 to that of T2");
    }
    cert.add("A T1 = q T2 A", operator_norm(a * p.t1 - p.q * p.t2 * a) / (1.0 + operator_norm(a)),
             Window::Full);
  } else {
    merge_checks(cert, check_q_commuting(p.t1, p.t2, p.q, c.tol));
  }
  cert.norms["||T1||"] = operator_norm(p.t1);
  cert.norms["||T2||"] = operator_norm(p.t2);
  return {cert.all_pass() ? kAllPass : kCheckFailed, report_for(c, cert), ""};
}

RunOutcome suite(const RunConfig& c) {
  const auto outcomes = run_criteria(c.seed, c.tol);
  Certificate cert;
  cert.construction = "suite";
  cert.tolerances = c.tol;
  for (const auto& o : outcomes) {
    for (const auto& m : o.metrics) {
      cert.add("criterion " + std::to_string(o.id) + ": " + m.name, m.worst, Window::Full, m.bound);
    }
  }
  Json r = report_for(c, cert);
  r["criteria"] = criteria_to_json(outcomes);
  return {cert.all_pass() ? kAllPass : kCheckFailed, r, ""};
}

}  // namespace

Tolerances tolerances_from_env(Tolerances base) {
  if (const char* v = std::getenv("QLIFT_TOL_RESIDUAL"); v != nullptr && *v != '\0') {
    char* end = nullptr;
    const double r = std::strtod(v, &end);
    if (end == v || *end != '\0') {
      fail(ErrorCode::InvalidArgument, std::string("QLIFT_TOL_RESIDUAL is not a number: ") + v);
    }
    base.residual_tol = r;
  }
  base.validate();
  return base;
}

RunOutcome execute(const RunConfig& config) {
  try {
    config.tol.validate();
    if (config.command == "gen") return gen(config);
    if (config.command == "dilate") return dilate(config);
    if (config.command == "lift") return lift(config);
    if (config.command == "coextend") return coextend(config);
    if (config.command == "verify") return verify_pair(config);
    if (config.command == "suite") return suite(config);
    fail(ErrorCode::InvalidArgument, "unknown command '" + config.command + "'");
  } catch (const Error& e) {
    return {kInvalidInput, Json(), std::string("error: ") + e.what()};
  } catch (const Json::exception& e) {
    return {kInvalidInput, Json(), std::string("error: malformed JSON input: ") + e.what()};
  }
}

int run(const RunConfig& config, std::ostream& err) {
  const RunOutcome out = execute(config);
  if (out.status == kInvalidInput) {
    err << out.diagnostic << "\n";
    return out.status;
  }
  try {
    write_text(config.output, dump(out.report));
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  if (out.status == kCheckFailed) err << "one or more checks failed\n";
  return out.status;
}

}  // namespace qlift::cli

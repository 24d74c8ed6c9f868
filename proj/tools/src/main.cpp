#include <iostream>

#include <CLI11.hpp>

#include "qlift_cli/run.hpp"

namespace {

void add_common(CLI::App* sub, qlift::cli::RunConfig& cfg, std::string& q_text, bool needs_input) {
  sub->add_option("--q", q_text, "q as \"re,im\" or \"r@degrees\"");
  sub->add_option("--seed", cfg.seed, "random seed");
  sub->add_option("-o,--output", cfg.output, "report path (\"-\" for stdout)");
  if (needs_input) sub->add_option("-i,--input", cfg.input, "input JSON path (\"-\" for stdin)")->required();
  sub->add_option("--rank-tol", cfg.tol.rank_tol, "relative singular-value cutoff");
  sub->add_option("--psd-tol", cfg.tol.psd_tol, "negative-eigenvalue slack");
  sub->add_option("--residual-tol", cfg.tol.residual_tol, "identity residual budget");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qlift::cli;
  CLI::App app{"q-commuting dilations, co-extensions and q-commutant lifting"};
  app.set_version_flag("--version", QLIFT_VERSION_STRING);
  app.require_subcommand(1);

  RunConfig cfg;
  std::string q_text;

  auto* gen = app.add_subcommand("gen", "generate a q-commuting pair");
  add_common(gen, cfg, q_text, false);
  gen->add_option("--family", cfg.family, "jordan | hardy | random | intertwining")
      ->check(CLI::IsMember({"jordan", "hardy", "random", "intertwining"}));
  gen->add_option("--dim", cfg.dim, "dimension");
  std::string a_text, b_text, d_text;
  gen->add_option("--a", a_text, "jordan entry a");
  gen->add_option("--b", b_text, "jordan entry b");
  gen->add_option("--d", d_text, "jordan entry d");

  auto* dilate = app.add_subcommand("dilate", "build a truncated dilation and check it");
  add_common(dilate, cfg, q_text, true);
  dilate->add_option("--kind", cfg.kind, "isometric | coisometric | unitary")
      ->check(CLI::IsMember({"isometric", "coisometric", "unitary"}));
  dilate->add_option("--depth", cfg.depth, "truncation depth N");

  auto* lift = app.add_subcommand("lift", "run a lifting engine on a pair");
  add_common(lift, cfg, q_text, true);
  lift->add_option("--engine", cfg.engine, "isometric | coiso | commutant | adjoint | unitary")
      ->check(CLI::IsMember({"isometric", "coiso", "commutant", "adjoint", "unitary"}));
  lift->add_option("--depth", cfg.depth, "truncation depth N");

  auto* coextend = app.add_subcommand("coextend", "build co-isometric co-extensions");
  add_common(coextend, cfg, q_text, true);
  coextend->add_option("--mode", cfg.mode, "triple | intertwining")
      ->check(CLI::IsMember({"triple", "intertwining"}));
  coextend->add_option("--depth", cfg.depth, "truncation depth N");
  coextend->add_option("--copies", cfg.copies, "number of extra chain copies M");
  coextend->add_option("--pad", cfg.pad, "padding summands (0, 1 or 2)");

  auto* verify = app.add_subcommand("verify", "check the q-commutation of a pair");
  add_common(verify, cfg, q_text, true);

  auto* suite = app.add_subcommand("suite", "run the acceptance suite");
  add_common(suite, cfg, q_text, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalidInput;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  try {
    if (!q_text.empty()) cfg.q = parse_q(q_text);
    if (!a_text.empty()) cfg.a = parse_q(a_text);
    if (!b_text.empty()) cfg.b = parse_q(b_text);
    if (!d_text.empty()) cfg.d = parse_q(d_text);
    cfg.tol = tolerances_from_env(cfg.tol);
  } catch (const qlift::Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kInvalidInput;
  }
  return run(cfg, std::cerr);
}

#pragma once

// A lifted operator together with the identities it is claimed to satisfy.
//
// Each identity is stored symbolically as a sum of scaled operator words
// whose letters name matrices: "op" is the lifted operator, any other name
// is looked up in the result's context, and a trailing '*' takes the
// adjoint. Storing the words rather than just the numbers lets verify
// re-evaluate every residual from scratch.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlift/certificate.hpp"
#include "qlift/dilation.hpp"

namespace qlift {

struct Term {
  Complex coeff{1.0, 0.0};
  std::vector<std::string> factors;
};

struct Identity {
  std::string label;
  Window window = Window::Full;
  std::vector<Term> terms;
  /// When set the residual is | ||sum|| - target | / (1 + target) instead of
  /// ||sum||.
  std::optional<double> norm_target;
  /// Reported identities go to Certificate::reported and are never asserted.
  bool asserted = true;
};

struct NormClaim {
  double achieved = 0.0;
  double target = 0.0;
};

struct LiftResult {
  std::string construction;
  MatrixOp op;
  ChainSpace domain_chain;
  ChainSpace codomain_chain;
  std::map<std::string, MatrixOp> context;
  std::vector<Identity> identities;
  NormClaim norm_claim;
  Certificate certificate;

  /// Resolves a factor name ("op", "op*", "V", "V*", ...).
  /// Throws InvalidArgument for unknown names.
  MatrixOp factor(const std::string& name) const;
  /// Recomputes the residual of an identity from the stored matrices.
  double evaluate(const Identity& id) const;
  /// Evaluates the identity, stores it and files its residual in the
  /// certificate (as a check or as a reported value).
  double record(Identity id);
};

/// Convenience builders for identity terms.
Term term(std::vector<std::string> factors, Complex coeff = {1.0, 0.0});

/// Projection-name helpers: "P[n]" for the domain chain, "Pc[n]" for the
/// codomain chain.
std::string dom_proj(Index n);
std::string cod_proj(Index n);

}  // namespace qlift

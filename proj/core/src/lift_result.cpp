#include "qlift/lift_result.hpp"

#include <cmath>

namespace qlift {

MatrixOp LiftResult::factor(const std::string& name) const {
  const bool adjoint = !name.empty() && name.back() == '*';
  const std::string base = adjoint ? name.substr(0, name.size() - 1) : name;
  const MatrixOp* m = nullptr;
  if (base == "op") {
    m = &op;
  } else {
    const auto it = context.find(base);
    if (it == context.end()) fail(ErrorCode::InvalidArgument, "unknown identity factor '" + base + "'");
    m = &it->second;
  }
  return adjoint ? MatrixOp(m->adjoint()) : *m;
}

double LiftResult::evaluate(const Identity& id) const {
  MatrixOp sum;
  for (const Term& t : id.terms) {
    if (t.factors.empty()) fail(ErrorCode::InvalidArgument, "identity term without factors");
    MatrixOp prod = factor(t.factors.front());
    for (std::size_t k = 1; k < t.factors.size(); ++k) {
      const MatrixOp next = factor(t.factors[k]);
      if (prod.cols() != next.rows()) {
        fail(ErrorCode::DimensionMismatch, "identity '" + id.label + "': factor '" +
                                               t.factors[k] + "' does not compose");
      }
      prod = prod * next;
    }
    prod *= t.coeff;
    if (sum.size() == 0) {
      sum = std::move(prod);
    } else {
      require_same_shape(sum, prod, id.label.c_str());
      sum += prod;
    }
  }
  const double n = sum.size() == 0 ? 0.0 : operator_norm(sum);
  if (id.norm_target) return std::abs(n - *id.norm_target) / (1.0 + *id.norm_target);
  return n;
}

double LiftResult::record(Identity id) {
  const double r = evaluate(id);
  if (id.asserted) {
    certificate.add(id.label, r, id.window);
  } else {
    certificate.reported[id.label] = r;
  }
  identities.push_back(std::move(id));
  return r;
}

Term term(std::vector<std::string> factors, Complex coeff) { return {coeff, std::move(factors)}; }

std::string dom_proj(Index n) { return "P[" + std::to_string(n) + "]"; }
std::string cod_proj(Index n) { return "Pc[" + std::to_string(n) + "]"; }

}  // namespace qlift

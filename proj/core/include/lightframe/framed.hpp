#ifndef LIGHTFRAME_FRAMED_HPP
#define LIGHTFRAME_FRAMED_HPP

#include <vector>

#include "lightframe/check.hpp"
#include "lightframe/metric.hpp"
#include "lightframe/tensor.hpp"

namespace lightframe {

// Globally framed f-structure: an endomorphism field phi, characteristic
// vector fields xi_a with dual one-forms eta^a, and causal signs epsilon_a.
struct GffStructure {
  TensorField phi;               // (1,1)
  std::vector<TensorField> xi;   // (1,0) each
  std::vector<TensorField> eta;  // (0,1) each
  std::vector<int> epsilon;      // +1 or -1 each

  std::size_t order() const { return xi.size(); }
  int epsilon_sum() const;
};

// Shape/size validation; throws MathError on malformed input.
void validate_structure(const GffStructure& s);

// Phi(X,Y) = g(X, phi Y), as a (0,2) field.
TensorField fundamental_two_form(const TensorField& g, const GffStructure& s);

// Nijenhuis torsion of phi as a (1,2) field:
// N(X,Y) = [phiX, phiY] - phi[phiX, Y] - phi[X, phiY] + phi^2 [X, Y].
TensorField nijenhuis(const TensorField& phi);

// Sum of the characteristic fields and the sign-weighted sum of their duals.
TensorField xi_bar(const GffStructure& s);
TensorField eta_bar(const GffStructure& s);

// Algebraic compatibility of (phi, xi, eta, epsilon) with the metric:
//   phi^2 = -I + sum eta^a (x) xi_a        eta^a(xi_b) = delta^a_b
//   phi xi_a = 0                           eta^a o phi = 0
//   g(phiX, phiY) = g(X,Y) - sum eps_a eta^a(X) eta^a(Y)
//   eta^a(X) = eps_a g(X, xi_a)
std::vector<CheckResult> check_framed_axioms(const TensorField& g, const GffStructure& s);

// Normality: N + 2 sum_a d(eta^a) (x) xi_a = 0.
std::vector<CheckResult> check_normality(const GffStructure& s);

// Full metric structure: d(eta^a) equals the fundamental two-form for every a,
// (nabla_X phi)Y = g(phiX, phiY) xi_bar + eta_bar(Y) phi^2 X, and
// nabla_X xi_a = -eps_a phi X, for the Levi-Civita coefficients `gamma`.
std::vector<CheckResult> check_metric_structure(const Metric& m, const TensorField& gamma,
                                                const GffStructure& s);

}  // namespace lightframe

#endif

#ifndef LIGHTFRAME_INDUCED_HPP
#define LIGHTFRAME_INDUCED_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lightframe/check.hpp"
#include "lightframe/hypersurface.hpp"
#include "lightframe/metric.hpp"
#include "lightframe/tensor.hpp"

namespace lightframe {

// Scale factor of a proportionality scan: either the exact factor, or a
// witness pair where proportionality breaks.
struct Proportionality {
  std::optional<RationalExpr> factor;
  std::string witness;  // first breaking pair when factor is absent
};

// Induced geometry of a characteristic lightlike hypersurface.
//
// Wraps a lightlike frame together with the ambient metric and its
// Christoffel symbols, pulls every ambient object back along the immersion,
// and exposes the Gauss/Weingarten data: the second fundamental form B, the
// transversal one-form tau, the screen second fundamental form C, both shape
// operators, the induced connection, and the inherited structure tensor
// phi X = phibar X - u(X) N with u(X) = g(X, V).
//
// All tables over the preferred tangent basis [E, D0-fields..., U, V] are
// computed eagerly in the constructor; the report methods only read them, so
// a fully constructed object is safe to share across readers.
class InducedGeometry {
 public:
  InducedGeometry(LightlikeFrame frame, const Metric& ambient_metric,
                  const TensorField& ambient_christoffel);

  const LightlikeFrame& frame() const { return frame_; }
  const Chart& chart() const { return frame_.imm.u_chart; }

  // Tangent basis [E, D0-fields..., U, V] and printable names. When the
  // frame's D0 fields coincide with restricted characteristic fields they
  // are named xi_1..xi_r, otherwise W_1..W_k.
  const std::vector<FieldAlong>& basis() const { return basis_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  std::size_t basis_index(const std::string& name) const;

  // gbar(x, y) along the immersion; arguments need not be tangent.
  RationalExpr pairing(const FieldAlong& x, const FieldAlong& y) const;
  // Ambient covariant derivative nablabar_x y along the immersion; x tangent.
  FieldAlong ambient_connection(const FieldAlong& x, const FieldAlong& y) const;
  // B(x, y) = gbar(nablabar_x y, E).
  RationalExpr second_fundamental(const FieldAlong& x, const FieldAlong& y) const;
  // tau(x) = gbar(nablabar_x N, E).
  RationalExpr transversal_form(const FieldAlong& x) const;
  // C(x, py) = gbar(nablabar_x py, N) for py in the screen bundle.
  RationalExpr screen_form(const FieldAlong& x, const FieldAlong& py) const;
  // A_N x = -(nablabar_x N - tau(x) N); always tangent.
  FieldAlong shape_transversal(const FieldAlong& x) const;
  // A*_E x = -(nabla_x E + tau(x) E); always tangent.
  FieldAlong shape_screen(const FieldAlong& x) const;
  // nabla_x y = nablabar_x y - B(x, y) N; always tangent.
  FieldAlong induced_connection(const FieldAlong& x, const FieldAlong& y) const;
  // Ambient phibar applied along the immersion; may leave the tangent bundle.
  FieldAlong structure_ambient(const FieldAlong& x) const;
  // phi x = phibar x - u(x) N; always tangent.
  FieldAlong structure_tangent(const FieldAlong& x) const;
  // u(x) = g(x, V).
  RationalExpr u_form(const FieldAlong& x) const;
  // eta^alpha(x) pulled back along the immersion; alpha is 0-based.
  RationalExpr eta_form(std::size_t alpha, const FieldAlong& x) const;
  // x(f) for a tangent x and a scalar f on the source chart.
  RationalExpr directional_scalar(const FieldAlong& x, const RationalExpr& f) const;
  // [x, y] of tangent fields, as a tangent field.
  FieldAlong lie(const FieldAlong& x, const FieldAlong& y) const;
  // Coefficients of a tangent field w in basis().
  std::vector<RationalExpr> resolve_in_basis(const FieldAlong& w) const;

  // Named basis-field convenience lookups.
  const FieldAlong& radical() const { return frame_.E; }
  const FieldAlong& transversal() const { return frame_.N; }

  // Gauss/Weingarten consistency: symmetry of B, B(., E) = 0, the four
  // shape-operator pairings, A*_E E = 0, the non-metricity identity of the
  // induced connection, and metricity on screen arguments.
  std::vector<CheckResult> gauss_weingarten_report() const;
  // The inherited framed structure (phi, xi_alpha, U, eta^alpha, u) and the
  // covariant identities for (nabla_x phi) y and (nabla_x u) y.
  std::vector<CheckResult> structure_report() const;
  // Whether B vanishes identically on the basis, cross-checked against the
  // equivalent pair of covariant conditions.
  std::vector<CheckResult> totally_geodesic_report() const;
  // Proportionality scans B = rho g on the tangent basis and C = lambda g on
  // the screen part of the basis.
  Proportionality umbilical_factor() const;
  Proportionality screen_umbilical_factor() const;
  std::vector<CheckResult> umbilicity_report() const;
  // The degenerate distribution D0 = ker phibar (cap) screen: symmetry
  // criteria, the bracket oracle, the screen-valued second fundamental form
  // h0 with its F-frame expansion, signed traces and mean curvature, the
  // restricted structure identities, and the phibar-derivative scalars.
  std::vector<CheckResult> d0_report() const;
  // The distribution D = D0 (+) span{V} (+) span{E}: the three B-conditions,
  // the bracket oracle on the U-component, the ltr-component of the ambient
  // phibar-derivative, and parallelism when B vanishes.
  std::vector<CheckResult> d_report() const;
  // Gauss-Codazzi-type relations tying the ambient curvature to derivatives
  // of B and to the induced curvature, over all ordered basis triples.
  // ambient_r04 is the ambient (0,4) curvature tensor.
  std::vector<CheckResult> curvature_report(const TensorField& ambient_r04) const;

  // Screen-valued second fundamental form of D0: the component of
  // nabla_x y0 along span{E, U, V}, for tangent x and y0 in D0.
  FieldAlong screen_valued_form(const FieldAlong& x, const FieldAlong& y0) const;

 private:
  RationalExpr pulled(const RationalExpr& ambient_scalar) const;
  bool is_zero_field(const FieldAlong& w) const;
  std::string scalar_str(const RationalExpr& v) const;
  std::string field_str(const FieldAlong& w) const;

  LightlikeFrame frame_;
  std::vector<std::string> ambient_names_;
  std::vector<std::string> source_names_;
  Matrix gf_;                              // pulled ambient metric, m x m
  std::vector<Matrix> gammaf_;             // pulled Christoffel, [A][B][C]
  Matrix phif_;                            // pulled phibar matrix, [A][B]
  std::vector<std::vector<RationalExpr>> etaf_;  // pulled eta^alpha, [alpha][A]
  std::vector<int> epsilon_;
  std::vector<FieldAlong> basis_;
  std::vector<std::string> names_;
  Matrix basis_columns_;                   // coeffs of basis fields as columns
  std::vector<std::vector<FieldAlong>> nabla_;   // induced connection table
  Matrix b_;                               // B on basis pairs
  std::vector<RationalExpr> tau_;          // tau on basis
  Matrix c_;                               // C on basis pairs (0 on column E)
};

}  // namespace lightframe

#endif  // LIGHTFRAME_INDUCED_HPP

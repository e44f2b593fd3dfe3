#ifndef LIGHTFRAME_HYPERSURFACE_HPP
#define LIGHTFRAME_HYPERSURFACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "lightframe/framed.hpp"
#include "lightframe/linalg.hpp"
#include "lightframe/metric.hpp"

namespace lightframe {

// Parametrized hypersurface x^A = f^A(u^1..u^{m-1}). Row a of the Jacobian is
// the pushforward of d/du^a expressed in the ambient coordinate frame.
struct Immersion {
  Chart u_chart;                // dim m-1
  Chart x_chart;                // dim m
  std::vector<RationalExpr> f;  // m expressions over u_chart
  Matrix jacobian;              // (m-1) x m, J[a][A] = d f^A / d u^a

  std::size_t ambient_dim() const { return x_chart.dim(); }
  std::size_t dim() const { return u_chart.dim(); }
};

// Validates shapes and the maximal-rank condition rank(J) = m-1.
Immersion make_immersion(Chart u_chart, Chart x_chart, std::vector<RationalExpr> f);

// Composition with f: ambient expressions/components become functions of u.
RationalExpr pullback_scalar(const Immersion& imm, const RationalExpr& a);
TensorField pullback_components(const Immersion& imm, const TensorField& t);

// Ambient vector field restricted to the hypersurface: `ambient` holds the
// x-frame components as functions of u; tangent fields additionally carry the
// u-frame coefficients a with sum_a a^a J[a][A] = ambient^A.
struct FieldAlong {
  std::vector<RationalExpr> ambient;
  std::optional<std::vector<RationalExpr>> coeffs;

  bool tangent() const { return coeffs.has_value(); }
  bool operator==(const FieldAlong& rhs) const { return ambient == rhs.ambient; }
};

// Restriction of an ambient (1,0) field; tangency is decided on the way.
FieldAlong restrict_field(const Immersion& imm, const TensorField& v);
// Tangent field assembled from u-frame coefficients.
FieldAlong tangent_field(const Immersion& imm, std::vector<RationalExpr> coeffs);

// g_ab = (gbar_AB o f) J[a][A] J[b][B] as a (0,2) field over the u chart.
TensorField induced_metric(const Immersion& imm, const Metric& m);

// D^A = det of the Jacobian with column A removed (unsigned), A = 0..m-1.
std::vector<RationalExpr> jacobian_minors(const Immersion& imm);

// M_AB = det of the metric coordinate matrix with row A and column B removed
// (unsigned), over the ambient chart.
Matrix metric_minors(const Metric& m);

struct LightlikeVerdict {
  bool lightlike = false;  // Delta == 0 identically
  RationalExpr delta;      // canonical Delta over the u chart
};

// Delta = det(induced metric), computed independently as the direct
// determinant and as the minor expansion sum_{A,B} (M_AB o f) D^A D^B.
// Disagreement between the two routes is a hard fault (MathError).
LightlikeVerdict lightlike_test(const Immersion& imm, const Metric& m);

// Exact solution a of J^T a = v o f; nullopt when v is not tangent.
std::optional<std::vector<RationalExpr>> tangency_test(const Immersion& imm,
                                                       const TensorField& v);
std::optional<std::vector<RationalExpr>> tangency_coeffs(
    const Immersion& imm, const std::vector<RationalExpr>& ambient_over_u);

// Generator of the (required rank-one) kernel of the induced metric,
// denominator-cleared, content-reduced, first nonzero coefficient positive.
// A supplied candidate (ambient components over the x chart) is verified for
// tangency and kernel membership and used instead.
FieldAlong radical_section(const Immersion& imm, const Metric& m,
                           const std::optional<TensorField>& candidate = std::nullopt);

// N = (1/g(Z,E)) (Z - (g(Z,Z)/(2 g(Z,E))) E); requires g(Z,E) != 0. The output
// satisfies g(N,E) = 1 and g(N,N) = 0 identically.
FieldAlong transversal_section(const Immersion& imm, const Metric& m, const FieldAlong& e,
                               const FieldAlong& z);

// Deterministic auxiliary-field scan: coordinate fields corrected by the
// characteristic duals, dx^A - sum_a eta^a(dx^A) xi_a, then the plain
// coordinate fields; the first with g(Z,E) != 0 wins.
FieldAlong scan_transversal(const Immersion& imm, const Metric& m, const GffStructure& s,
                            const FieldAlong& e);

// Characteristic frame of a lightlike hypersurface: radical and transversal
// sections, screen basis [xi_1..xi_r, phibar E, phibar N] (completed with
// N-orthogonal coordinate projections when the dimension calls for it), the
// degenerate distribution D = D0 + span{phibar E} + span{E}, and the
// structure fields U = -phibar N, V = -phibar E.
struct LightlikeFrame {
  Immersion imm;
  GffStructure structure;
  FieldAlong E, Z, N;
  FieldAlong phiE, phiN;            // tangent screen fields
  FieldAlong U, V;                  // U = -phiN, V = -phiE
  std::vector<FieldAlong> xi;       // restricted characteristic fields
  std::vector<FieldAlong> screen;   // xi..., completion..., phiE, phiN
  std::vector<FieldAlong> d0;       // g-orthocomplement of {phiE, phiN} in screen
  std::vector<FieldAlong> d;        // d0..., V, E
  std::size_t screen_index = 0;     // negative entries of a congruent diagonal
};

// Builds the frame; throws MathError when the hypersurface is not
// characteristic (some xi not tangent), when 2n = m - r < 4, or when a frame
// invariant fails (degenerate screen, g(phiN, phiE) != 1, Eq-(4) pairings).
LightlikeFrame characteristic_screen(const Immersion& imm, const Metric& m,
                                     const GffStructure& s, const FieldAlong& e,
                                     const FieldAlong& z, const FieldAlong& n);

// Basis of the g-orthogonal complement of the screen inside the ambient
// tangent bundle along the hypersurface (ambient components over u).
std::vector<std::vector<RationalExpr>> screen_perp(const LightlikeFrame& frame,
                                                   const Metric& m);

struct ObstructionVerdict {
  bool nonexistence = false;
  std::string reason;
};

// Existence filter for characteristic lightlike hypersurfaces. Tangency of
// coordinate characteristic fields forces the corresponding Jacobian minors to
// vanish; when the remaining block of metric minors is a constant definite
// form, lightlikeness then forces every maximal minor to vanish, contradicting
// rank m-1 — so no such hypersurface exists.
ObstructionVerdict characteristic_obstruction(const Metric& m, const GffStructure& s);

}  // namespace lightframe

#endif

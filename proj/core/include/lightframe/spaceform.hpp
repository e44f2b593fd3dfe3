#ifndef LIGHTFRAME_SPACEFORM_HPP
#define LIGHTFRAME_SPACEFORM_HPP

#include <optional>

#include "lightframe/framed.hpp"
#include "lightframe/metric.hpp"

namespace lightframe {

// Constant-coefficient (0,4) curvature model attached to a framed metric
// structure, with e the sum of the causal signs:
//   R(X,Y,Z,W) = -(c+3e)/4 {g(phiY,phiZ)g(phiX,phiW) - g(phiX,phiZ)g(phiY,phiW)}
//                -(c-e)/4 {Phi(W,X)Phi(Z,Y) - Phi(Z,X)Phi(W,Y)
//                          + 2 Phi(X,Y)Phi(W,Z)}
//                -{etabar(W)etabar(X)g(phiZ,phiY) - etabar(W)etabar(Y)g(phiZ,phiX)
//                  + etabar(Y)etabar(Z)g(phiW,phiX) - etabar(Z)etabar(X)g(phiW,phiY)}
TensorField space_form_model(const Metric& m, const GffStructure& s, const Rat& c);

// Solves r == space_form_model(c) for a single rational constant: the model is
// affine in c, so c is read off the first component (row-major order) with a
// nonzero c-coefficient and then verified on every component. nullopt when the
// fit is inconsistent or c would not be constant.
std::optional<Rat> fit_space_form_constant(const TensorField& r, const Metric& m,
                                           const GffStructure& s);

}  // namespace lightframe

#endif

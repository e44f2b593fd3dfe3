#ifndef LIGHTFRAME_CONNECTION_HPP
#define LIGHTFRAME_CONNECTION_HPP

#include "lightframe/metric.hpp"
#include "lightframe/tensor.hpp"

namespace lightframe {

// Levi-Civita connection coefficients as a (1,2) component array:
// gamma(h, i, j) = (1/2) g^{hk} (d_i g_kj + d_j g_ik - d_k g_ij).
TensorField christoffel(const Metric& m);

// (nabla_X Y)^k = X^i (d_i Y^k + gamma^k_{ij} Y^j).
TensorField covariant_derivative(const TensorField& gamma, const TensorField& x,
                                 const TensorField& y);

// Full covariant derivative of an (r,s) field; the result is (r,s+1) with the
// differentiation index in the FIRST covariant slot.
TensorField covariant_derivative_tensor(const TensorField& gamma, const TensorField& t);

// riemann_1_3(l, i, j, k) is the l-th component of
// R(e_i, e_j) e_k = nabla_i nabla_j e_k - nabla_j nabla_i e_k.
TensorField riemann_1_3(const TensorField& gamma);

// Covariant curvature with the pairing R(X,Y,Z,W) = -g(R(X,Y)Z, W):
// riemann_0_4(i, j, k, w) = -g_{lw} riemann_1_3(l, i, j, k).
TensorField riemann_0_4(const Metric& m, const TensorField& gamma);

}  // namespace lightframe

#endif

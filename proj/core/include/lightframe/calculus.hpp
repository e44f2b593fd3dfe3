#ifndef LIGHTFRAME_CALCULUS_HPP
#define LIGHTFRAME_CALCULUS_HPP

#include "lightframe/tensor.hpp"

namespace lightframe {

// [x,y]^k = x^j d_j y^k - y^j d_j x^k for (1,0) fields on one chart.
TensorField lie_bracket(const TensorField& x, const TensorField& y);

// Exterior derivative of an antisymmetric (0,k) field, graded-half convention:
//   (dw)_{i0..ik} = 1/(k+1) * sum_a (-1)^a d_{i_a} w_{i0..(omit a)..ik}
// so a one-form gives (dw)_ij = (d_i w_j - d_j w_i)/2 and dw(X,Y) is the plain
// double contraction. Throws MathError when w is not antisymmetric.
TensorField exterior_derivative(const TensorField& w);

// Componentwise substitution of chart coordinates; images are expressions on
// target with one entry per source coordinate. Slot structure is unchanged.
TensorField substitute_components(const TensorField& t,
                                  const std::vector<RationalExpr>& images,
                                  const Chart& target);

}  // namespace lightframe

#endif

#ifndef LIGHTFRAME_METRIC_HPP
#define LIGHTFRAME_METRIC_HPP

#include "lightframe/linalg.hpp"
#include "lightframe/tensor.hpp"

namespace lightframe {

// Semi-Riemannian metric: the (0,2) field, its exact inverse, and the
// coordinate determinant (nonzero by construction).
struct Metric {
  TensorField g;     // (0,2), symmetric
  TensorField ginv;  // (2,0)
  RationalExpr det;

  RationalExpr on(const TensorField& x, const TensorField& y) const {
    return bilinear_on(g, x, y);
  }
};

// Validates symmetry and nondegeneracy; throws MathError otherwise.
Metric make_metric(const TensorField& g);

Matrix metric_matrix(const TensorField& g);

// Index lowering/raising against the metric.
TensorField lower_index(const Metric& m, const TensorField& x);  // (1,0) -> (0,1)
TensorField raise_index(const Metric& m, const TensorField& w);  // (0,1) -> (1,0)

}  // namespace lightframe

#endif

#include "lightframe/metric.hpp"

#include "lightframe/error.hpp"

namespace lightframe {

Matrix metric_matrix(const TensorField& g) {
  const std::size_t n = g.dim();
  Matrix m(n, std::vector<RationalExpr>(n, g.chart().zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = g(i, j);
  }
  return m;
}

Metric make_metric(const TensorField& g) {
  if (g.contravariant_rank() != 0 || g.covariant_rank() != 2) {
    throw MathError("metric must be a (0,2) field");
  }
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g(i, j) != g(j, i)) throw MathError("metric is not symmetric");
    }
  }
  const Matrix m = metric_matrix(g);
  const RationalExpr det = determinant(m);
  if (det.is_zero()) throw MathError("metric is degenerate");
  const Matrix inv = inverse(m);
  TensorField ginv(g.chart(), 2, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) ginv(i, j) = inv[i][j];
  }
  return Metric{g, std::move(ginv), det};
}

TensorField lower_index(const Metric& m, const TensorField& x) {
  if (x.contravariant_rank() != 1 || x.covariant_rank() != 0) {
    throw MathError("lower_index needs a (1,0) field");
  }
  std::vector<RationalExpr> comps(x.dim(), x.chart().zero());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    for (std::size_t j = 0; j < x.dim(); ++j) comps[i] += m.g(i, j) * x.components()[j];
  }
  return one_form(x.chart(), std::move(comps));
}

TensorField raise_index(const Metric& m, const TensorField& w) {
  if (w.contravariant_rank() != 0 || w.covariant_rank() != 1) {
    throw MathError("raise_index needs a (0,1) field");
  }
  std::vector<RationalExpr> comps(w.dim(), w.chart().zero());
  for (std::size_t i = 0; i < w.dim(); ++i) {
    for (std::size_t j = 0; j < w.dim(); ++j) comps[i] += m.ginv(i, j) * w.components()[j];
  }
  return vector_field(w.chart(), std::move(comps));
}

}  // namespace lightframe

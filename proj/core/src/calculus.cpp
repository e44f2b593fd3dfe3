#include "lightframe/calculus.hpp"

#include "lightframe/error.hpp"

namespace lightframe {

TensorField lie_bracket(const TensorField& x, const TensorField& y) {
  if (x.contravariant_rank() != 1 || x.covariant_rank() != 0 ||
      y.contravariant_rank() != 1 || y.covariant_rank() != 0 || x.chart() != y.chart()) {
    throw MathError("lie_bracket needs two (1,0) fields on one chart");
  }
  const std::size_t n = x.dim();
  std::vector<RationalExpr> comps(n, x.chart().zero());
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      comps[k] += x.components()[j] * y.components()[k].derivative(j) -
                  y.components()[j] * x.components()[k].derivative(j);
    }
  }
  return vector_field(x.chart(), std::move(comps));
}

namespace {

void check_antisymmetric(const TensorField& w) {
  const std::size_t k = w.covariant_rank();
  if (k < 2) return;
  std::vector<std::size_t> idx(k, 0);
  do {
    for (std::size_t a = 0; a + 1 < k; ++a) {
      std::vector<std::size_t> swapped = idx;
      std::swap(swapped[a], swapped[a + 1]);
      if (w.at(idx) != -w.at(swapped)) {
        throw MathError("exterior_derivative needs an antisymmetric form");
      }
    }
  } while (advance_multi_index(idx, w.dim()));
}

}  // namespace

TensorField exterior_derivative(const TensorField& w) {
  if (w.contravariant_rank() != 0) {
    throw MathError("exterior_derivative needs a (0,k) field");
  }
  check_antisymmetric(w);
  const std::size_t k = w.covariant_rank();
  TensorField d(w.chart(), 0, k + 1);
  const RationalExpr weight =
      w.chart().scalar(Rat(1, static_cast<unsigned>(k) + 1));
  std::vector<std::size_t> idx(k + 1, 0);
  std::vector<std::size_t> omit(k, 0);
  do {
    RationalExpr sum = w.chart().zero();
    for (std::size_t a = 0; a <= k; ++a) {
      std::size_t o = 0;
      for (std::size_t pos = 0; pos <= k; ++pos) {
        if (pos != a) omit[o++] = idx[pos];
      }
      const RationalExpr partial = w.at(omit).derivative(idx[a]);
      sum += (a % 2 == 0) ? partial : -partial;
    }
    d.at(idx) = weight * sum;
  } while (advance_multi_index(idx, w.dim()));
  return d;
}

TensorField substitute_components(const TensorField& t,
                                  const std::vector<RationalExpr>& images,
                                  const Chart& target) {
  if (images.size() != t.dim()) {
    throw MathError("substitute_components image count mismatch");
  }
  if (target.dim() != t.dim()) {
    throw MathError("substitute_components keeps index ranges: charts must share dimension");
  }
  for (const RationalExpr& im : images) {
    if (im.nvars() != target.dim()) {
      throw MathError("substitute_components images not over the target chart");
    }
  }
  TensorField out(target, t.contravariant_rank(), t.covariant_rank());
  for (std::size_t i = 0; i < t.components().size(); ++i) {
    out.components()[i] = t.components()[i].substitute(images);
  }
  return out;
}

}  // namespace lightframe

#include "lightframe/connection.hpp"

#include <vector>

#include "lightframe/error.hpp"

namespace lightframe {

TensorField christoffel(const Metric& m) {
  const Chart& chart = m.g.chart();
  const std::size_t n = chart.dim();
  const RationalExpr half = chart.scalar(Rat(1, 2));

  // dg[k][i][j] = d_k g_ij
  std::vector<std::vector<std::vector<RationalExpr>>> dg(
      n, std::vector<std::vector<RationalExpr>>(n, std::vector<RationalExpr>(n, chart.zero())));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) dg[k][i][j] = m.g(i, j).derivative(k);
    }
  }

  TensorField gamma(chart, 1, 2);
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        RationalExpr sum = chart.zero();
        for (std::size_t k = 0; k < n; ++k) {
          if (m.ginv(h, k).is_zero()) continue;
          sum += m.ginv(h, k) * (dg[i][k][j] + dg[j][i][k] - dg[k][i][j]);
        }
        gamma(h, i, j) = half * sum;
        gamma(h, j, i) = gamma(h, i, j);
      }
    }
  }
  return gamma;
}

TensorField covariant_derivative(const TensorField& gamma, const TensorField& x,
                                 const TensorField& y) {
  if (x.contravariant_rank() != 1 || x.covariant_rank() != 0 || y.contravariant_rank() != 1 ||
      y.covariant_rank() != 0) {
    throw MathError("covariant_derivative acts on vector fields");
  }
  const Chart& chart = gamma.chart();
  const std::size_t n = chart.dim();
  std::vector<RationalExpr> comps(n, chart.zero());
  for (std::size_t k = 0; k < n; ++k) {
    RationalExpr sum = chart.zero();
    for (std::size_t i = 0; i < n; ++i) {
      if (x(i).is_zero()) continue;
      RationalExpr inner = y(k).derivative(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (gamma(k, i, j).is_zero() || y(j).is_zero()) continue;
        inner += gamma(k, i, j) * y(j);
      }
      sum += x(i) * inner;
    }
    comps[k] = sum;
  }
  return vector_field(chart, std::move(comps));
}

TensorField covariant_derivative_tensor(const TensorField& gamma, const TensorField& t) {
  const Chart& chart = t.chart();
  const std::size_t n = chart.dim();
  const std::size_t r = t.contravariant_rank();
  const std::size_t s = t.covariant_rank();

  TensorField result(chart, r, s + 1);
  std::vector<std::size_t> out(r + s + 1, 0);
  do {
    const std::size_t d = out[r];  // differentiation index (first covariant slot)
    std::vector<std::size_t> base;
    base.reserve(r + s);
    for (std::size_t p = 0; p < r; ++p) base.push_back(out[p]);
    for (std::size_t q = 0; q < s; ++q) base.push_back(out[r + 1 + q]);

    RationalExpr val = t.at(base).derivative(d);
    std::vector<std::size_t> idx = base;
    for (std::size_t p = 0; p < r; ++p) {
      const std::size_t a = base[p];
      for (std::size_t mm = 0; mm < n; ++mm) {
        if (gamma(a, d, mm).is_zero()) continue;
        idx[p] = mm;
        if (!t.at(idx).is_zero()) val += gamma(a, d, mm) * t.at(idx);
      }
      idx[p] = a;
    }
    for (std::size_t q = 0; q < s; ++q) {
      const std::size_t b = base[r + q];
      for (std::size_t mm = 0; mm < n; ++mm) {
        if (gamma(mm, d, b).is_zero()) continue;
        idx[r + q] = mm;
        if (!t.at(idx).is_zero()) val -= gamma(mm, d, b) * t.at(idx);
      }
      idx[r + q] = b;
    }
    result.at(out) = std::move(val);
  } while (advance_multi_index(out, n));
  return result;
}

TensorField riemann_1_3(const TensorField& gamma) {
  const Chart& chart = gamma.chart();
  const std::size_t n = chart.dim();
  TensorField riem(chart, 1, 3);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          RationalExpr val = gamma(l, j, k).derivative(i) - gamma(l, i, k).derivative(j);
          for (std::size_t mm = 0; mm < n; ++mm) {
            if (!gamma(l, i, mm).is_zero() && !gamma(mm, j, k).is_zero()) {
              val += gamma(l, i, mm) * gamma(mm, j, k);
            }
            if (!gamma(l, j, mm).is_zero() && !gamma(mm, i, k).is_zero()) {
              val -= gamma(l, j, mm) * gamma(mm, i, k);
            }
          }
          riem(l, i, j, k) = val;
          riem(l, j, i, k) = -riem(l, i, j, k);
        }
      }
    }
  }
  return riem;
}

TensorField riemann_0_4(const Metric& m, const TensorField& gamma) {
  const TensorField riem = riemann_1_3(gamma);
  const Chart& chart = gamma.chart();
  const std::size_t n = chart.dim();
  TensorField r04(chart, 0, 4);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t w = 0; w < n; ++w) {
          RationalExpr sum = chart.zero();
          for (std::size_t l = 0; l < n; ++l) {
            if (m.g(l, w).is_zero() || riem(l, i, j, k).is_zero()) continue;
            sum += m.g(l, w) * riem(l, i, j, k);
          }
          r04(i, j, k, w) = -sum;
          r04(j, i, k, w) = sum;
        }
      }
    }
  }
  return r04;
}

}  // namespace lightframe

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "lightframe/calculus.hpp"
#include "lightframe/chart.hpp"
#include "lightframe/connection.hpp"
#include "lightframe/metric.hpp"

using namespace lightframe;

namespace {

// The 6-dimensional framed metric used throughout the tool's bundled data:
// coordinates x1, x2, y1, y2, z1, z2.
TensorField framed_r6_metric(const Chart& chart) {
  TensorField g(chart, 0, 2);
  auto set = [&](std::size_t i, std::size_t j, const std::string& s) {
    g(i, j) = chart.parse(s);
    g(j, i) = g(i, j);
  };
  set(0, 0, "2*y1^2-1/2");
  set(1, 1, "2*y2^2+1/2");
  set(0, 1, "-2*y1*y2");
  set(0, 4, "y1");
  set(0, 5, "y1");
  set(1, 4, "-y2");
  set(1, 5, "-y2");
  set(2, 2, "-1/2");
  set(3, 3, "1/2");
  set(4, 4, "1");
  set(5, 5, "1");
  return g;
}

struct RandomGeometry {
  Chart chart{"plane", {"x", "y"}};
  std::mt19937 rng;

  explicit RandomGeometry(unsigned seed) : rng(seed) {}

  RationalExpr small_poly() {
    std::uniform_int_distribution<int> coeff(-2, 2);
    const RationalExpr x = chart.coordinate(0);
    const RationalExpr y = chart.coordinate(1);
    return chart.scalar(Rat(coeff(rng))) + chart.scalar(Rat(coeff(rng))) * x +
           chart.scalar(Rat(coeff(rng))) * y;
  }

  Metric random_metric() {
    for (;;) {
      TensorField g(chart, 0, 2);
      std::uniform_int_distribution<int> sign(0, 1);
      const RationalExpr x = chart.coordinate(0);
      const RationalExpr y = chart.coordinate(1);
      g(0, 0) = chart.scalar(Rat(sign(rng) ? 1 : -1)) + x * x;
      g(1, 1) = chart.scalar(Rat(sign(rng) ? 2 : -2)) + y * y;
      g(0, 1) = chart.scalar(Rat(1, 2)) * x * y;
      g(1, 0) = g(0, 1);
      const Matrix mat = metric_matrix(g);
      if (!determinant(mat).is_zero()) return make_metric(g);
    }
  }

  TensorField random_vector() {
    return vector_field(chart, {small_poly(), small_poly()});
  }
};

}  // namespace

TEST_CASE("Levi-Civita coefficients of the framed r6 metric match the reference table") {
  const Chart chart("r6", {"x1", "x2", "y1", "y2", "z1", "z2"});
  const Metric m = make_metric(framed_r6_metric(chart));
  CHECK(m.det == chart.parse("1/16"));

  const TensorField gamma = christoffel(m);

  TensorField expected(chart, 1, 2);
  auto set = [&](std::size_t h, std::size_t i, std::size_t j, const std::string& s) {
    expected(h - 1, i - 1, j - 1) = chart.parse(s);
    expected(h - 1, j - 1, i - 1) = expected(h - 1, i - 1, j - 1);
  };
  set(3, 1, 1, "4*y1");
  set(3, 1, 2, "-2*y2");
  set(4, 1, 2, "2*y1");
  set(4, 2, 2, "-4*y2");
  set(5, 1, 3, "1/2+2*y1^2");
  set(6, 1, 3, "1/2+2*y1^2");
  set(1, 1, 3, "-2*y1");
  set(2, 1, 4, "-2*y1");
  set(1, 2, 3, "2*y2");
  set(2, 2, 4, "2*y2");
  set(5, 2, 4, "-1/2+2*y2^2");
  set(6, 2, 4, "-1/2+2*y2^2");
  set(5, 1, 4, "-2*y1*y2");
  set(6, 1, 4, "-2*y1*y2");
  set(5, 2, 3, "-2*y1*y2");
  set(6, 2, 3, "-2*y1*y2");
  set(3, 1, 5, "1");
  set(3, 1, 6, "1");
  set(4, 2, 5, "1");
  set(4, 2, 6, "1");
  set(5, 3, 5, "y1");
  set(5, 3, 6, "y1");
  set(6, 3, 5, "y1");
  set(6, 3, 6, "y1");
  set(1, 3, 5, "-1");
  set(1, 3, 6, "-1");
  set(2, 4, 5, "-1");
  set(2, 4, 6, "-1");
  set(5, 4, 5, "-y2");
  set(5, 4, 6, "-y2");
  set(6, 4, 5, "-y2");
  set(6, 4, 6, "-y2");

  std::size_t mismatches = 0;
  for (std::size_t h = 0; h < 6; ++h) {
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) {
        if (gamma(h, i, j) != expected(h, i, j)) {
          ++mismatches;
          MESSAGE("gamma(", h + 1, ",", i + 1, ",", j + 1,
                  ") = ", gamma(h, i, j).to_string(chart.coordinates()), " expected ",
                  expected(h, i, j).to_string(chart.coordinates()));
        }
      }
    }
  }
  CHECK(mismatches == 0);
  CHECK(gamma == expected);
}

TEST_CASE("the framed r6 metric is parallel for its own connection") {
  const Chart chart("r6", {"x1", "x2", "y1", "y2", "z1", "z2"});
  const Metric m = make_metric(framed_r6_metric(chart));
  const TensorField gamma = christoffel(m);
  CHECK(covariant_derivative_tensor(gamma, m.g).is_zero());
}

TEST_CASE("Koszul properties hold on random plane metrics") {
  RandomGeometry geo(81231);
  for (int iter = 0; iter < 100; ++iter) {
    const Metric m = geo.random_metric();
    const TensorField gamma = christoffel(m);
    const TensorField x = geo.random_vector();
    const TensorField y = geo.random_vector();
    const TensorField z = geo.random_vector();
    const RationalExpr f = geo.small_poly();

    // Torsion-free: nabla_X Y - nabla_Y X = [X, Y].
    CHECK(covariant_derivative(gamma, x, y) - covariant_derivative(gamma, y, x) ==
          lie_bracket(x, y));

    // Leibniz in the argument: nabla_X (f Y) = X(f) Y + f nabla_X Y.
    CHECK(covariant_derivative(gamma, x, y.scaled(f)) ==
          y.scaled(directional(x, f)) + covariant_derivative(gamma, x, y).scaled(f));

    // Metric compatibility: X(g(Y,Z)) = g(nabla_X Y, Z) + g(Y, nabla_X Z).
    CHECK(directional(x, m.on(y, z)) ==
          m.on(covariant_derivative(gamma, x, y), z) + m.on(y, covariant_derivative(gamma, x, z)));

    // Full covariant derivative of the metric vanishes.
    CHECK(covariant_derivative_tensor(gamma, m.g).is_zero());
  }
}

TEST_CASE("curvature components agree with the commutator oracle") {
  RandomGeometry geo(81232);
  for (int iter = 0; iter < 25; ++iter) {
    const Metric m = geo.random_metric();
    const TensorField gamma = christoffel(m);
    const TensorField riem = riemann_1_3(gamma);
    for (int rep = 0; rep < 4; ++rep) {
      const TensorField x = geo.random_vector();
      const TensorField y = geo.random_vector();
      const TensorField z = geo.random_vector();

      // Operator side: nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
      const TensorField op = covariant_derivative(gamma, x, covariant_derivative(gamma, y, z)) -
                             covariant_derivative(gamma, y, covariant_derivative(gamma, x, z)) -
                             covariant_derivative(gamma, lie_bracket(x, y), z);

      // Tensor side: contract riem(l,i,j,k) with X^i Y^j Z^k.
      const std::size_t n = geo.chart.dim();
      std::vector<RationalExpr> comps(n, geo.chart.zero());
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
              if (riem(l, i, j, k).is_zero()) continue;
              comps[l] += riem(l, i, j, k) * x(i) * y(j) * z(k);
            }
          }
        }
      }
      CHECK(op == vector_field(geo.chart, std::move(comps)));
    }
  }
}

TEST_CASE("covariant curvature of the framed r6 metric has the classical symmetries") {
  const Chart chart("r6", {"x1", "x2", "y1", "y2", "z1", "z2"});
  const Metric m = make_metric(framed_r6_metric(chart));
  const TensorField gamma = christoffel(m);
  const TensorField r = riemann_0_4(m, gamma);

  bool pair_antisym = true, slot_antisym = true, pair_sym = true, bianchi = true;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      for (std::size_t k = 0; k < 6; ++k) {
        for (std::size_t w = 0; w < 6; ++w) {
          if (r(i, j, k, w) != -r(j, i, k, w)) pair_antisym = false;
          if (r(i, j, k, w) != -r(i, j, w, k)) slot_antisym = false;
          if (r(i, j, k, w) != r(k, w, i, j)) pair_sym = false;
          if (!(r(i, j, k, w) + r(j, k, i, w) + r(k, i, j, w)).is_zero()) bianchi = false;
        }
      }
    }
  }
  CHECK(pair_antisym);
  CHECK(slot_antisym);
  CHECK(pair_sym);
  CHECK(bianchi);
  CHECK_FALSE(r.is_zero());
}

TEST_CASE("full covariant derivative specializes to the vector-field derivative") {
  RandomGeometry geo(81233);
  for (int iter = 0; iter < 100; ++iter) {
    const Metric m = geo.random_metric();
    const TensorField gamma = christoffel(m);
    const TensorField x = geo.random_vector();
    const TensorField y = geo.random_vector();

    const TensorField dy = covariant_derivative_tensor(gamma, y);  // (1,1): (l ; i)
    const std::size_t n = geo.chart.dim();
    std::vector<RationalExpr> contracted(n, geo.chart.zero());
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t i = 0; i < n; ++i) contracted[l] += dy(l, i) * x(i);
    }
    CHECK(vector_field(geo.chart, std::move(contracted)) == covariant_derivative(gamma, x, y));

    // On scalars it is the plain differential.
    const RationalExpr f = geo.small_poly();
    const TensorField df = covariant_derivative_tensor(gamma, TensorField::scalar(geo.chart, f));
    CHECK(df(0) == f.derivative(0));
    CHECK(df(1) == f.derivative(1));
  }
}

#include <random>
#include <vector>

#include "doctest.h"
#include "lightframe/calculus.hpp"
#include "lightframe/error.hpp"
#include "lightframe/tensor.hpp"

using namespace lightframe;

namespace {

const Chart kChart("M", {"x", "y", "z"});

RationalExpr random_poly_expr(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> nterms(0, 3);
  std::uniform_int_distribution<std::uint32_t> expd(0, 2);
  Polynomial p(kChart.dim());
  const int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    Exponents e{expd(rng), expd(rng), expd(rng)};
    p.add_term(e, Int(coeff(rng)));
  }
  return RationalExpr(std::move(p));
}

TensorField random_vector(std::mt19937& rng) {
  std::vector<RationalExpr> comps;
  for (std::size_t i = 0; i < kChart.dim(); ++i) comps.push_back(random_poly_expr(rng));
  return vector_field(kChart, std::move(comps));
}

TensorField random_one_form(std::mt19937& rng) {
  std::vector<RationalExpr> comps;
  for (std::size_t i = 0; i < kChart.dim(); ++i) comps.push_back(random_poly_expr(rng));
  return one_form(kChart, std::move(comps));
}

TensorField random_tensor(std::mt19937& rng, std::size_t r, std::size_t s) {
  TensorField t(kChart, r, s);
  for (RationalExpr& c : t.components()) c = random_poly_expr(rng);
  return t;
}

}  // namespace

TEST_CASE("chart validation") {
  CHECK_THROWS_AS(Chart("bad", {"x", "x"}), MathError);
  CHECK_THROWS_AS(Chart("bad", {"2x"}), MathError);
  CHECK_THROWS_AS(Chart("bad", {}), MathError);
  CHECK(kChart.parse("x*y - z") == kChart.parse("-(z - x*y)"));
}

TEST_CASE("contraction matches explicit sums") {
  std::mt19937 rng(7101);
  const TensorField t = random_tensor(rng, 1, 1);
  RationalExpr trace = kChart.zero();
  for (std::size_t i = 0; i < kChart.dim(); ++i) trace += t(i, i);
  CHECK(scalar_value(t.contract(0, 1)) == trace);

  const TensorField u = random_tensor(rng, 1, 2);
  const TensorField c = u.contract(0, 2);
  for (std::size_t j = 0; j < kChart.dim(); ++j) {
    RationalExpr s = kChart.zero();
    for (std::size_t k = 0; k < kChart.dim(); ++k) s += u(k, j, k);
    CHECK(c.at({j}) == s);
  }
  CHECK_THROWS_AS(u.contract(1, 2), MathError);
}

TEST_CASE("tensor product components and pairings") {
  std::mt19937 rng(7102);
  const TensorField x = random_vector(rng);
  const TensorField w = random_one_form(rng);
  const TensorField p = tensor_product(x, w);  // (1,1)
  for (std::size_t i = 0; i < kChart.dim(); ++i) {
    for (std::size_t j = 0; j < kChart.dim(); ++j) {
      CHECK(p(i, j) == x.components()[i] * w.components()[j]);
    }
  }
  CHECK(scalar_value(p.contract(0, 1)) == one_form_on(w, x));

  const TensorField g = random_tensor(rng, 0, 2);
  const TensorField y = random_vector(rng);
  RationalExpr direct = kChart.zero();
  for (std::size_t i = 0; i < kChart.dim(); ++i) {
    for (std::size_t j = 0; j < kChart.dim(); ++j) {
      direct += g(i, j) * x.components()[i] * y.components()[j];
    }
  }
  CHECK(bilinear_on(g, x, y) == direct);
}

TEST_CASE("lie bracket satisfies antisymmetry, Jacobi, and Leibniz") {
  std::mt19937 rng(7103);
  for (int i = 0; i < 110; ++i) {
    const TensorField x = random_vector(rng);
    const TensorField y = random_vector(rng);
    const TensorField z = random_vector(rng);
    CHECK(lie_bracket(x, y) == -lie_bracket(y, x));
    const TensorField jacobi = lie_bracket(lie_bracket(x, y), z) +
                               lie_bracket(lie_bracket(y, z), x) +
                               lie_bracket(lie_bracket(z, x), y);
    CHECK(jacobi.is_zero());
    const RationalExpr f = random_poly_expr(rng);
    CHECK(lie_bracket(x, y.scaled(f)) ==
          lie_bracket(x, y).scaled(f) + y.scaled(directional(x, f)));
  }
}

TEST_CASE("bracket pairs with functions: [x,y](f) = x(y(f)) - y(x(f))") {
  std::mt19937 rng(7104);
  for (int i = 0; i < 100; ++i) {
    const TensorField x = random_vector(rng);
    const TensorField y = random_vector(rng);
    const RationalExpr f = random_poly_expr(rng);
    CHECK(directional(lie_bracket(x, y), f) ==
          directional(x, directional(y, f)) - directional(y, directional(x, f)));
  }
}

TEST_CASE("exterior derivative: convention, intrinsic formula, and d after d") {
  const TensorField w = one_form(kChart, {kChart.parse("y"), kChart.zero(), kChart.zero()});
  const TensorField dw = exterior_derivative(w);
  CHECK(dw(0, 1) == kChart.parse("-1/2"));
  CHECK(dw(1, 0) == kChart.parse("1/2"));

  std::mt19937 rng(7105);
  for (int i = 0; i < 110; ++i) {
    const TensorField a = random_one_form(rng);
    const TensorField da = exterior_derivative(a);
    // dw(x,y) = (x(w(y)) - y(w(x)) - w([x,y]))/2 under the half convention.
    const TensorField x = random_vector(rng);
    const TensorField y = random_vector(rng);
    const RationalExpr lhs = bilinear_on(da, x, y);
    const RationalExpr rhs =
        (directional(x, one_form_on(a, y)) - directional(y, one_form_on(a, x)) -
         one_form_on(a, lie_bracket(x, y))) /
        kChart.parse("2");
    CHECK(lhs == rhs);
    CHECK(exterior_derivative(da).is_zero());
  }
  // d after d on scalars, with df itself checked first.
  for (int i = 0; i < 100; ++i) {
    const RationalExpr f = random_poly_expr(rng);
    const TensorField df = exterior_derivative(TensorField::scalar(kChart, f));
    for (std::size_t j = 0; j < kChart.dim(); ++j) {
      CHECK(df.at({j}) == f.derivative(j));
    }
    CHECK(exterior_derivative(df).is_zero());
  }
  CHECK_THROWS_AS(exterior_derivative(random_tensor(rng, 0, 2)), MathError);
}

TEST_CASE("evaluation commutes with contraction") {
  std::mt19937 rng(7106);
  int done = 0;
  for (int i = 0; i < 400 && done < 100; ++i) {
    const TensorField t = random_tensor(rng, 1, 1);
    std::uniform_int_distribution<int> vd(-4, 4);
    const std::vector<Rat> pt{Rat(vd(rng)), Rat(vd(rng), 2), Rat(vd(rng))};
    try {
      const std::vector<Rat> traced = evaluate_at_point(t.contract(0, 1), pt);
      const std::vector<Rat> full = evaluate_at_point(t, pt);
      Rat s = 0;
      for (std::size_t k = 0; k < kChart.dim(); ++k) s += full[k * kChart.dim() + k];
      CHECK(traced[0] == s);
      ++done;
    } catch (const MathError&) {
    }
  }
  CHECK(done == 100);
}

TEST_CASE("componentwise substitution between same-dimension charts") {
  const Chart target("U", {"u1", "u2", "u3"});
  const std::vector<RationalExpr> images{target.parse("u1 + u2"), target.parse("u2^2"),
                                         target.parse("u3 - 1")};
  const TensorField x = vector_field(
      kChart, {kChart.parse("x*y"), kChart.parse("z"), kChart.parse("1/2")});
  const TensorField moved = substitute_components(x, images, target);
  CHECK(moved.components()[0] == target.parse("(u1 + u2)*u2^2"));
  CHECK(moved.components()[1] == target.parse("u3 - 1"));
  CHECK(moved.components()[2] == target.parse("1/2"));
  CHECK_THROWS_AS(substitute_components(x, images, Chart("V", {"a", "b"})), MathError);
}

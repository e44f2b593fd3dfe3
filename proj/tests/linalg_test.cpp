#include <doctest.h>

#include <random>
#include <vector>

#include "lightframe/error.hpp"
#include "lightframe/linalg.hpp"

using namespace lightframe;

namespace {

constexpr std::size_t kVars = 2;

RationalExpr re_int(long v) { return RationalExpr::integer(kVars, Int(v)); }

RationalExpr random_entry(std::mt19937& rng) {
  // Small polynomial entries in two variables; occasional rational coefficient.
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> pick(0, 5);
  RationalExpr x = RationalExpr::variable(kVars, 0);
  RationalExpr y = RationalExpr::variable(kVars, 1);
  switch (pick(rng)) {
    case 0: return re_int(coeff(rng));
    case 1: return re_int(coeff(rng)) * x;
    case 2: return re_int(coeff(rng)) * y + re_int(coeff(rng));
    case 3: return re_int(coeff(rng)) * x * y;
    case 4: return RationalExpr::constant(kVars, Rat(coeff(rng), 2));
    default: return re_int(coeff(rng)) * x + re_int(coeff(rng)) * y;
  }
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, std::vector<RationalExpr>(cols, RationalExpr::zero(kVars)));
  for (auto& row : m) {
    for (auto& e : row) e = random_entry(rng);
  }
  return m;
}

// Cofactor expansion along the first row: the independent determinant oracle.
RationalExpr cofactor_det(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  RationalExpr sum = RationalExpr::zero(kVars);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<RationalExpr> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    RationalExpr term = m[0][j] * cofactor_det(minor);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size(), p = b[0].size(), k = b.size();
  Matrix c(n, std::vector<RationalExpr>(p, RationalExpr::zero(kVars)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t t = 0; t < k; ++t) c[i][j] += a[i][t] * b[t][j];
    }
  }
  return c;
}

}  // namespace

TEST_CASE("determinant matches cofactor expansion on random matrices") {
  std::mt19937 rng(50411);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  for (int iter = 0; iter < 120; ++iter) {
    const std::size_t n = size(rng);
    const Matrix m = random_matrix(rng, n, n);
    CHECK(determinant(m) == cofactor_det(m));
  }
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937 rng(50412);
  for (int iter = 0; iter < 40; ++iter) {
    const Matrix a = random_matrix(rng, 3, 3);
    const Matrix b = random_matrix(rng, 3, 3);
    CHECK(determinant(matmul(a, b)) == determinant(a) * determinant(b));
  }
}

TEST_CASE("kernel vectors annihilate the matrix and count the free columns") {
  std::mt19937 rng(50413);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t rows = size(rng), cols = size(rng);
    const Matrix m = random_matrix(rng, rows, cols);
    const std::size_t r = matrix_rank(m);
    const auto kern = kernel_basis(m);
    CHECK(r + kern.size() == cols);
    for (const auto& v : kern) {
      for (std::size_t i = 0; i < rows; ++i) {
        RationalExpr dot = RationalExpr::zero(kVars);
        for (std::size_t j = 0; j < cols; ++j) dot += m[i][j] * v[j];
        CHECK(dot.is_zero());
      }
    }
  }
}

TEST_CASE("rank-deficient constructions are detected") {
  std::mt19937 rng(50414);
  for (int iter = 0; iter < 60; ++iter) {
    // Rank <= 2 by construction: three rows, the third = row0 + row1.
    Matrix m = random_matrix(rng, 2, 4);
    std::vector<RationalExpr> sum;
    for (std::size_t j = 0; j < 4; ++j) sum.push_back(m[0][j] + m[1][j]);
    m.push_back(sum);
    CHECK(matrix_rank(m) <= 2);
    CHECK(kernel_basis(m).size() >= 2);
  }
}

TEST_CASE("inverse reproduces the identity and rejects singular input") {
  std::mt19937 rng(50415);
  int done = 0;
  while (done < 60) {
    const Matrix m = random_matrix(rng, 3, 3);
    if (determinant(m).is_zero()) continue;
    ++done;
    const Matrix inv = inverse(m);
    const Matrix prod = matmul(m, inv);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(prod[i][j] == (i == j ? RationalExpr::one(kVars) : RationalExpr::zero(kVars)));
      }
    }
  }
  Matrix singular(2, std::vector<RationalExpr>(2, RationalExpr::one(kVars)));
  CHECK_THROWS_AS((void)inverse(singular), MathError);
}

TEST_CASE("solve_square solves exactly when the system is regular") {
  std::mt19937 rng(50416);
  int done = 0;
  while (done < 60) {
    const Matrix a = random_matrix(rng, 3, 3);
    if (determinant(a).is_zero()) continue;
    ++done;
    std::vector<RationalExpr> x0;
    for (int j = 0; j < 3; ++j) x0.push_back(random_entry(rng));
    std::vector<RationalExpr> b(3, RationalExpr::zero(kVars));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) b[i] += a[i][j] * x0[j];
    }
    const auto sol = solve_square(a, b);
    REQUIRE(sol.has_value());
    for (std::size_t j = 0; j < 3; ++j) CHECK((*sol)[j] == x0[j]);
  }
}

TEST_CASE("congruent_diagonal preserves determinant sign and counts inertia") {
  // Constant symmetric matrices with known signature.
  auto c = [](long v) { return RationalExpr::integer(kVars, Int(v)); };

  SUBCASE("hyperbolic plane pairing has index 1") {
    Matrix m = {{c(0), c(1)}, {c(1), c(0)}};
    const auto d = congruent_diagonal(m);
    REQUIRE(d.size() == 2);
    int neg = 0;
    for (const auto& e : d) {
      REQUIRE(e.is_constant());
      if (e.constant_value() < 0) ++neg;
    }
    CHECK(neg == 1);
  }

  SUBCASE("diag(1,1,-1) keeps its inertia") {
    Matrix m = {{c(1), c(0), c(0)}, {c(0), c(1), c(0)}, {c(0), c(0), c(-1)}};
    const auto d = congruent_diagonal(m);
    int neg = 0, pos = 0;
    for (const auto& e : d) {
      REQUIRE(e.is_constant());
      if (e.constant_value() < 0) ++neg;
      if (e.constant_value() > 0) ++pos;
    }
    CHECK(pos == 2);
    CHECK(neg == 1);
  }

  SUBCASE("random congruence transforms keep inertia invariant") {
    std::mt19937 rng(50417);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int iter = 0; iter < 100; ++iter) {
      // Start from diag(1,-1,2): inertia (2,1).
      Matrix d0 = {{c(1), c(0), c(0)}, {c(0), c(-1), c(0)}, {c(0), c(0), c(2)}};
      Matrix p(3, std::vector<RationalExpr>(3, RationalExpr::zero(kVars)));
      do {
        for (auto& row : p) {
          for (auto& e : row) e = c(coeff(rng));
        }
      } while (determinant(p).is_zero());
      // m = p^T d0 p is symmetric with the same inertia.
      Matrix pt(3, std::vector<RationalExpr>(3, RationalExpr::zero(kVars)));
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) pt[i][j] = p[j][i];
      }
      const Matrix m = matmul(pt, matmul(d0, p));
      REQUIRE(is_symmetric(m));
      const auto diag = congruent_diagonal(m);
      int neg = 0, pos = 0;
      for (const auto& e : diag) {
        REQUIRE(e.is_constant());
        if (e.constant_value() < 0) ++neg;
        if (e.constant_value() > 0) ++pos;
      }
      CHECK(pos == 2);
      CHECK(neg == 1);
    }
  }
}

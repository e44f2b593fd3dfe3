#include "lightframe/linalg.hpp"

#include <cassert>

#include "lightframe/error.hpp"
#include "lightframe/polynomial.hpp"

namespace lightframe {

namespace {

std::size_t nvars_of(const Matrix& m) {
  return m.empty() || m[0].empty() ? 0 : m[0][0].nvars();
}

void check_rectangular(const Matrix& m) {
  if (m.empty()) return;
  const std::size_t cols = m[0].size();
  const std::size_t nv = nvars_of(m);
  for (const auto& row : m) {
    if (row.size() != cols) throw MathError("ragged matrix");
    for (const auto& e : row) {
      if (e.nvars() != nv) throw MathError("matrix entries over mixed variable sets");
    }
  }
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  return *Polynomial::div_exact(a * b, Polynomial::gcd(a, b));
}

}  // namespace

RationalExpr determinant(const Matrix& m) {
  check_rectangular(m);
  const std::size_t n = m.size();
  if (n == 0) throw MathError("determinant of an empty matrix");
  if (m[0].size() != n) throw MathError("determinant needs a square matrix");
  const std::size_t nv = nvars_of(m);

  // Clear denominators rowwise: det(m) = det(P) / prod(row lcms).
  std::vector<std::vector<Polynomial>> p(n, std::vector<Polynomial>(n, Polynomial::zero(nv)));
  RationalExpr scale = RationalExpr::one(nv);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial l = Polynomial::constant(nv, 1);
    for (std::size_t j = 0; j < n; ++j) l = poly_lcm(l, m[i][j].den());
    for (std::size_t j = 0; j < n; ++j) {
      p[i][j] = m[i][j].num() * *Polynomial::div_exact(l, m[i][j].den());
    }
    scale = scale * RationalExpr(l);
  }

  // Fraction-free elimination; every division is exact.
  int sign = 1;
  Polynomial prev = Polynomial::constant(nv, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (p[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && p[r][k].is_zero()) ++r;
      if (r == n) return RationalExpr::zero(nv);
      std::swap(p[k], p[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        p[i][j] = *Polynomial::div_exact(p[i][j] * p[k][k] - p[i][k] * p[k][j], prev);
      }
      p[i][k] = Polynomial::zero(nv);
    }
    prev = p[k][k];
  }
  RationalExpr det = RationalExpr(p[n - 1][n - 1]) / scale;
  return sign < 0 ? -det : det;
}

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivot_columns) {
  check_rectangular(m);
  if (pivot_columns) pivot_columns->clear();
  if (m.empty()) return m;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  const std::size_t nv = nvars_of(m);

  // Clear denominators rowwise; scaling rows does not change the reduced form.
  std::vector<std::vector<Polynomial>> p(rows, std::vector<Polynomial>(cols, Polynomial::zero(nv)));
  for (std::size_t i = 0; i < rows; ++i) {
    Polynomial l = Polynomial::constant(nv, 1);
    for (std::size_t j = 0; j < cols; ++j) l = poly_lcm(l, m[i][j].den());
    for (std::size_t j = 0; j < cols; ++j) {
      p[i][j] = m[i][j].num() * *Polynomial::div_exact(l, m[i][j].den());
    }
  }

  // Single-division fraction-free Gauss-Jordan: after each step every entry
  // is a bordered minor of the cleared matrix, every pivot entry equals the
  // current pivot minor, and the division by the previous pivot is exact, so
  // the elimination never normalizes a quotient.
  std::vector<std::size_t> pivots;
  Polynomial prev = Polynomial::constant(nv, 1);
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t pivot = lead;
    while (pivot < rows && p[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(p[lead], p[pivot]);
    const Polynomial piv = p[lead][col];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead) continue;
      const Polynomial f = p[i][col];
      for (std::size_t j = 0; j < cols; ++j) {
        p[i][j] = *Polynomial::div_exact(p[i][j] * piv - f * p[lead][j], prev);
      }
    }
    prev = piv;
    pivots.push_back(col);
    ++lead;
  }

  Matrix r(rows, std::vector<RationalExpr>(cols, RationalExpr::zero(nv)));
  const RationalExpr scale(prev);
  for (std::size_t i = 0; i < lead; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!p[i][j].is_zero()) r[i][j] = RationalExpr(p[i][j]) / scale;
    }
  }
  if (pivot_columns) *pivot_columns = std::move(pivots);
  return r;
}

std::size_t matrix_rank(const Matrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

std::vector<std::vector<RationalExpr>> kernel_basis(const Matrix& m) {
  check_rectangular(m);
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  const std::size_t nv = nvars_of(m);
  std::vector<std::size_t> pivots;
  const Matrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<RationalExpr>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<RationalExpr> v(cols, RationalExpr::zero(nv));
    v[f] = RationalExpr::one(nv);
    for (std::size_t prow = 0; prow < pivots.size(); ++prow) {
      v[pivots[prow]] = -r[prow][f];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<RationalExpr>> solve_square(const Matrix& a,
                                                      const std::vector<RationalExpr>& b) {
  check_rectangular(a);
  const std::size_t n = a.size();
  if (n == 0 || a[0].size() != n || b.size() != n) {
    throw MathError("solve_square needs a square system");
  }
  Matrix aug = a;
  for (std::size_t i = 0; i < n; ++i) aug[i].push_back(b[i]);
  std::vector<std::size_t> pivots;
  const Matrix r = rref(aug, &pivots);
  if (pivots.size() != n || pivots.back() == n) return std::nullopt;
  std::vector<RationalExpr> x;
  x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) x.push_back(r[i][n]);
  return x;
}

Matrix inverse(const Matrix& m) {
  check_rectangular(m);
  const std::size_t n = m.size();
  if (n == 0 || m[0].size() != n) throw MathError("inverse needs a square matrix");
  const std::size_t nv = nvars_of(m);
  Matrix aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      aug[i].push_back(i == j ? RationalExpr::one(nv) : RationalExpr::zero(nv));
    }
  }
  std::vector<std::size_t> pivots;
  const Matrix r = rref(aug, &pivots);
  if (pivots.size() != n || pivots.back() >= n) throw MathError("matrix is singular");
  Matrix inv(n, std::vector<RationalExpr>(n, RationalExpr::zero(nv)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = r[i][n + j];
  }
  return inv;
}

bool is_symmetric(const Matrix& m) {
  if (m.empty()) return true;
  if (m.size() != m[0].size()) return false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m[i][j] != m[j][i]) return false;
    }
  }
  return true;
}

std::vector<RationalExpr> congruent_diagonal(Matrix m) {
  check_rectangular(m);
  if (!is_symmetric(m)) throw MathError("congruent_diagonal needs a symmetric matrix");
  const std::size_t n = m.size();
  const std::size_t nv = nvars_of(m);
  const RationalExpr zero = RationalExpr::zero(nv);
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k].is_zero()) {
      // Prefer a diagonal pivot below; otherwise fold in a row that has a
      // nonzero coupling (char != 2, so this makes the diagonal entry 2a).
      std::size_t d = k + 1;
      while (d < n && m[d][d].is_zero()) ++d;
      if (d < n) {
        std::swap(m[k], m[d]);
        for (auto& row : m) std::swap(row[k], row[d]);
      } else {
        std::size_t c = k + 1;
        while (c < n && m[k][c].is_zero()) ++c;
        if (c == n) continue;  // entire tail row/column is zero
        for (std::size_t j = 0; j < n; ++j) m[k][j] += m[c][j];
        for (std::size_t i = 0; i < n; ++i) m[i][k] += m[i][c];
      }
    }
    const RationalExpr pivot = m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      const RationalExpr f = m[i][k] / pivot;
      for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[k][j];
      for (std::size_t j = 0; j < n; ++j) m[j][i] -= f * m[j][k];
    }
  }
  std::vector<RationalExpr> diag;
  diag.reserve(n);
  for (std::size_t k = 0; k < n; ++k) diag.push_back(m[k][k]);
  return diag;
}

}  // namespace lightframe

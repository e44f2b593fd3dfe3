#ifndef LIGHTFRAME_LINALG_HPP
#define LIGHTFRAME_LINALG_HPP

#include <optional>
#include <vector>

#include "lightframe/rational_expr.hpp"

namespace lightframe {

// Rectangular matrix of exact rational expressions, row major.
using Matrix = std::vector<std::vector<RationalExpr>>;

// Exact determinant. Denominators are cleared rowwise, then the integer-style
// fraction-free elimination runs on polynomials, so no field gcd storms occur
// on the way.
RationalExpr determinant(const Matrix& m);

// Row rank over the rational-function field.
std::size_t matrix_rank(const Matrix& m);

// Reduced row echelon form; also reports the pivot columns.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivot_columns = nullptr);

// Basis of the right kernel {x : m x = 0}; one vector per free column, the
// free coordinate set to 1. Empty when the kernel is trivial.
std::vector<std::vector<RationalExpr>> kernel_basis(const Matrix& m);

// Unique solution of a square system; nullopt when the matrix is singular.
std::optional<std::vector<RationalExpr>> solve_square(const Matrix& a,
                                                      const std::vector<RationalExpr>& b);

// Inverse of a square matrix; throws MathError when singular.
Matrix inverse(const Matrix& m);

// Diagonal of a matrix congruent to the symmetric input (entries of D with
// D = S^T m S for some invertible S). Exact; used to read off signatures.
std::vector<RationalExpr> congruent_diagonal(Matrix m);

bool is_symmetric(const Matrix& m);

}  // namespace lightframe

#endif

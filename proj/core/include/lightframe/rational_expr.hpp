#ifndef LIGHTFRAME_RATIONAL_EXPR_HPP
#define LIGHTFRAME_RATIONAL_EXPR_HPP

#include <string>
#include <vector>

#include "lightframe/polynomial.hpp"

namespace lightframe {

// Quotient of integer-coefficient polynomials in canonical form: gcd-reduced
// (integer content included), denominator nonzero with positive leading
// coefficient under grlex. Equality of canonical forms is mathematical
// equality.
class RationalExpr {
 public:
  RationalExpr() : RationalExpr(Polynomial::zero(0)) {}
  explicit RationalExpr(Polynomial num);
  RationalExpr(Polynomial num, Polynomial den);

  static RationalExpr zero(std::size_t nvars);
  static RationalExpr one(std::size_t nvars);
  static RationalExpr integer(std::size_t nvars, Int value);
  static RationalExpr constant(std::size_t nvars, const Rat& value);
  static RationalExpr variable(std::size_t nvars, std::size_t index);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  std::size_t nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // Requires is_constant().
  Rat constant_value() const;

  RationalExpr operator-() const;
  friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
  // Throws MathError when b == 0.
  friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b);
  RationalExpr& operator+=(const RationalExpr& rhs) { return *this = *this + rhs; }
  RationalExpr& operator-=(const RationalExpr& rhs) { return *this = *this - rhs; }
  RationalExpr& operator*=(const RationalExpr& rhs) { return *this = *this * rhs; }
  RationalExpr& operator/=(const RationalExpr& rhs) { return *this = *this / rhs; }
  bool operator==(const RationalExpr& rhs) const = default;

  RationalExpr pow(std::uint32_t e) const;
  RationalExpr derivative(std::size_t var) const;
  // Replaces variable i by images[i]; images share a common variable count.
  // Throws MathError when the substituted denominator vanishes identically.
  RationalExpr substitute(const std::vector<RationalExpr>& images) const;
  // Throws MathError when the denominator vanishes at the point.
  Rat evaluate(const std::vector<Rat>& point) const;

  // Canonical rendering; parseable back to an equal expression.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

}  // namespace lightframe

#endif

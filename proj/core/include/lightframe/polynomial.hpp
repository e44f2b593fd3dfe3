#ifndef LIGHTFRAME_POLYNOMIAL_HPP
#define LIGHTFRAME_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lightframe {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Monomial exponent vector; its size equals the variable count of the owning
// polynomial.
using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic order, larger monomial first: higher total degree wins,
// ties break toward the earlier variable with the larger exponent. Used as the
// term-map comparator so begin() is the leading term.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Multivariate polynomial with exact integer coefficients over a fixed number
// of variables identified by index. Invariant: no stored coefficient is zero.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Int, GrlexGreater>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial zero(std::size_t nvars) { return Polynomial(nvars); }
  static Polynomial constant(std::size_t nvars, Int value);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(std::size_t nvars, Exponents exps, Int coeff);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Value of a constant polynomial (0 when zero); requires is_constant().
  Int constant_value() const;

  // Leading term under grlex; requires !is_zero().
  const std::pair<const Exponents, Int>& leading() const { return *terms_.begin(); }

  // Accumulates coeff onto the monomial, erasing the term if it cancels.
  void add_term(const Exponents& exps, const Int& coeff);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  bool operator==(const Polynomial& rhs) const = default;

  // gcd of coefficient magnitudes; 0 for the zero polynomial.
  Int content() const;
  Polynomial multiplied_by(const Int& c) const;
  // Divides every coefficient; requires exactness.
  Polynomial divided_by(const Int& c) const;

  // Quotient num/den when den divides exactly, nullopt otherwise.
  static std::optional<Polynomial> div_exact(const Polynomial& num, const Polynomial& den);
  // Nonnegative-leading-coefficient gcd, integer content included.
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  std::uint32_t degree_in(std::size_t var) const;
  std::uint32_t total_degree() const;
  Polynomial derivative(std::size_t var) const;
  Rat evaluate(const std::vector<Rat>& point) const;
  // Bit i set iff variable i occurs with positive exponent.
  std::uint64_t vars_used() const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

// x^e with a rational base, e >= 0.
Rat rat_pow(const Rat& base, std::uint32_t e);

}  // namespace lightframe

#endif

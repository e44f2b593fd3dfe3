#include "lightframe/rational_expr.hpp"

#include <cassert>

#include "lightframe/error.hpp"

namespace lightframe {

RationalExpr::RationalExpr(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.nvars(), 1)) {}

RationalExpr::RationalExpr(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  assert(num_.nvars() == den_.nvars());
  normalize();
}

RationalExpr RationalExpr::zero(std::size_t nvars) {
  return RationalExpr(Polynomial::zero(nvars));
}

RationalExpr RationalExpr::one(std::size_t nvars) {
  return RationalExpr(Polynomial::constant(nvars, 1));
}

RationalExpr RationalExpr::integer(std::size_t nvars, Int value) {
  return RationalExpr(Polynomial::constant(nvars, std::move(value)));
}

RationalExpr RationalExpr::constant(std::size_t nvars, const Rat& value) {
  return RationalExpr(Polynomial::constant(nvars, boost::multiprecision::numerator(value)),
                      Polynomial::constant(nvars, boost::multiprecision::denominator(value)));
}

RationalExpr RationalExpr::variable(std::size_t nvars, std::size_t index) {
  return RationalExpr(Polynomial::variable(nvars, index));
}

Rat RationalExpr::constant_value() const {
  assert(is_constant());
  return Rat(num_.constant_value(), den_.constant_value());
}

void RationalExpr::normalize() {
  if (den_.is_zero()) throw MathError("division by zero");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.nvars(), 1);
    return;
  }
  const Polynomial g = Polynomial::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *Polynomial::div_exact(num_, g);
    den_ = *Polynomial::div_exact(den_, g);
  }
  if (den_.leading().second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalExpr RationalExpr::operator-() const {
  RationalExpr r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
  assert(a.nvars() == b.nvars());
  if (a.den_ == b.den_) return RationalExpr(a.num_ + b.num_, a.den_);
  return RationalExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) {
  assert(a.nvars() == b.nvars());
  if (a.den_ == b.den_) return RationalExpr(a.num_ - b.num_, a.den_);
  return RationalExpr(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
  assert(a.nvars() == b.nvars());
  if (a.is_zero() || b.is_zero()) return RationalExpr::zero(a.nvars());
  // Cross-reduction keeps the final gcd cheap.
  const Polynomial g1 = Polynomial::gcd(a.num_, b.den_);
  const Polynomial g2 = Polynomial::gcd(b.num_, a.den_);
  return RationalExpr(*Polynomial::div_exact(a.num_, g1) * *Polynomial::div_exact(b.num_, g2),
                      *Polynomial::div_exact(a.den_, g2) * *Polynomial::div_exact(b.den_, g1));
}

RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
  if (b.is_zero()) throw MathError("division by zero");
  RationalExpr inv(b.den_, b.num_);
  return a * inv;
}

RationalExpr RationalExpr::pow(std::uint32_t e) const {
  RationalExpr r = one(nvars());
  for (std::uint32_t i = 0; i < e; ++i) r = r * *this;
  return r;
}

RationalExpr RationalExpr::derivative(std::size_t var) const {
  return RationalExpr(num_.derivative(var) * den_ - num_ * den_.derivative(var),
                      den_ * den_);
}

namespace {

RationalExpr substitute_poly(const Polynomial& p, const std::vector<RationalExpr>& images,
                             std::size_t out_nvars) {
  RationalExpr acc = RationalExpr::zero(out_nvars);
  for (const auto& [e, c] : p.terms()) {
    RationalExpr t = RationalExpr::integer(out_nvars, c);
    for (std::size_t v = 0; v < p.nvars(); ++v) {
      if (e[v] != 0) t = t * images[v].pow(e[v]);
    }
    acc = acc + t;
  }
  return acc;
}

}  // namespace

RationalExpr RationalExpr::substitute(const std::vector<RationalExpr>& images) const {
  if (images.size() != nvars()) throw MathError("substitution image count mismatch");
  const std::size_t out_nvars = images.empty() ? 0 : images.front().nvars();
  for (const auto& im : images) {
    if (im.nvars() != out_nvars) throw MathError("substitution images over mixed variable sets");
  }
  const RationalExpr n = substitute_poly(num_, images, out_nvars);
  const RationalExpr d = substitute_poly(den_, images, out_nvars);
  if (d.is_zero()) throw MathError("substitution makes a denominator vanish identically");
  return n / d;
}

Rat RationalExpr::evaluate(const std::vector<Rat>& point) const {
  const Rat d = den_.evaluate(point);
  if (d == 0) throw MathError("evaluation point is a pole");
  return num_.evaluate(point) / d;
}

namespace {

// True when the polynomial prints as a single multiplicative atom: a positive
// constant, or one variable with coefficient 1 (any exponent).
bool prints_as_atom(const Polynomial& p) {
  if (p.is_constant()) return p.constant_value() >= 0;
  if (p.terms().size() != 1) return false;
  const auto& [e, c] = *p.terms().begin();
  if (c != 1) return false;
  std::size_t vars = 0;
  for (std::uint32_t k : e) {
    if (k != 0) ++vars;
  }
  return vars == 1;
}

}  // namespace

std::string RationalExpr::to_string(const std::vector<std::string>& names) const {
  if (den_.is_one()) return num_.to_string(names);
  std::string n = num_.to_string(names);
  if (num_.terms().size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string(names);
  if (!prints_as_atom(den_)) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace lightframe

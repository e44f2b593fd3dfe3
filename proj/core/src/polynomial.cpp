#include "lightframe/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "lightframe/error.hpp"

namespace lightframe {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

Polynomial Polynomial::constant(std::size_t nvars, Int value) {
  Polynomial p(nvars);
  if (value != 0) p.terms_.emplace(Exponents(nvars, 0), std::move(value));
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  assert(index < nvars);
  Polynomial p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Int(1));
  return p;
}

Polynomial Polynomial::monomial(std::size_t nvars, Exponents exps, Int coeff) {
  assert(exps.size() == nvars);
  Polynomial p(nvars);
  if (coeff != 0) p.terms_.emplace(std::move(exps), std::move(coeff));
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exponents& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t k) { return k == 0; });
}

bool Polynomial::is_one() const { return is_constant() && constant_value() == 1; }

Int Polynomial::constant_value() const {
  assert(is_constant());
  return terms_.empty() ? Int(0) : terms_.begin()->second;
}

void Polynomial::add_term(const Exponents& exps, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  assert(nvars_ == rhs.nvars_);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  assert(nvars_ == rhs.nvars_);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  assert(lhs.nvars_ == rhs.nvars_);
  Polynomial r(lhs.nvars_);
  Exponents e(lhs.nvars_);
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Int Polynomial::content() const {
  Int g = 0;
  for (const auto& [e, c] : terms_) {
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::multiplied_by(const Int& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

Polynomial Polynomial::divided_by(const Int& c) const {
  assert(c != 0);
  Polynomial r(nvars_);
  for (const auto& [e, k] : terms_) {
    assert(k % c == 0);
    r.terms_.emplace(e, k / c);
  }
  return r;
}

std::optional<Polynomial> Polynomial::div_exact(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) return std::nullopt;
  Polynomial q(num.nvars_);
  Polynomial r = num;
  Exponents diff(num.nvars_);
  while (!r.is_zero()) {
    const auto& [re, rc] = r.leading();
    const auto& [de, dc] = den.leading();
    for (std::size_t i = 0; i < diff.size(); ++i) {
      if (re[i] < de[i]) return std::nullopt;
      diff[i] = re[i] - de[i];
    }
    if (rc % dc != 0) return std::nullopt;
    Int qc = rc / dc;
    q.add_term(diff, qc);
    r -= monomial(num.nvars_, diff, qc) * den;
  }
  return q;
}

namespace {

// Coefficient of var^k, with the var exponent dropped to zero.
Polynomial coeff_wrt(const Polynomial& p, std::size_t var, std::uint32_t k) {
  Polynomial r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] != k) continue;
    Exponents f = e;
    f[var] = 0;
    r.add_term(f, c);
  }
  return r;
}

// gcd of the var-coefficients (includes integer content).
Polynomial content_wrt(const Polynomial& p, std::size_t var) {
  Polynomial g = Polynomial::zero(p.nvars());
  for (std::uint32_t k = 0; k <= p.degree_in(var); ++k) {
    Polynomial c = coeff_wrt(p, var, k);
    if (!c.is_zero()) g = Polynomial::gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial shift_var(const Polynomial& p, std::size_t var, std::uint32_t k) {
  Polynomial r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[var] += k;
    r.add_term(f, c);
  }
  return r;
}

// Pseudo-remainder of a by b in var; b must have positive degree in var.
// Integer content is stripped as it grows, which only rescales the primitive
// part the caller extracts.
Polynomial prem(const Polynomial& a, const Polynomial& b, std::size_t var) {
  const std::uint32_t db = b.degree_in(var);
  const Polynomial lb = coeff_wrt(b, var, db);
  Polynomial r = a;
  while (!r.is_zero()) {
    const std::uint32_t dr = r.degree_in(var);
    if (dr < db) break;
    const Polynomial lr = coeff_wrt(r, var, dr);
    r = r * lb - shift_var(lr, var, dr - db) * b;
    if (!r.is_zero()) {
      const Int c = r.content();
      if (c > 1) r = r.divided_by(c);
    }
  }
  return r;
}

Polynomial sign_normalized(Polynomial p) {
  if (!p.is_zero() && p.leading().second < 0) return -p;
  return p;
}

// The image computations below run modulo a fixed word-sized prime: reduction
// mod p is a ring map, so divisibility facts over the integers survive it,
// while coefficients stay machine words no matter how large the inputs grow.
constexpr std::uint64_t kImagePrime = 2147483647;  // 2^31 - 1

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t acc = 1;
  base %= kImagePrime;
  while (exp != 0) {
    if (exp & 1u) acc = acc * base % kImagePrime;
    base = base * base % kImagePrime;
    exp >>= 1u;
  }
  return acc;
}

std::uint64_t mod_of(const Int& c) {
  Int r = c % Int(kImagePrime);
  if (r < 0) r += Int(kImagePrime);
  return r.convert_to<std::uint64_t>();
}

// Dense univariate coefficients (index = degree) of p seen as a polynomial in
// var, the other variables evaluated at point, everything mod kImagePrime.
std::vector<std::uint64_t> image_in_var(const Polynomial& p, std::size_t var,
                                        const std::vector<std::uint64_t>& point) {
  std::vector<std::uint64_t> img(p.degree_in(var) + 1, 0);
  for (const auto& [e, c] : p.terms()) {
    std::uint64_t t = mod_of(c);
    for (std::size_t w = 0; w < p.nvars(); ++w) {
      if (w != var && e[w] != 0) t = t * mod_pow(point[w], e[w]) % kImagePrime;
    }
    img[e[var]] = (img[e[var]] + t) % kImagePrime;
  }
  while (img.size() > 1 && img.back() == 0) img.pop_back();
  return img;
}

std::uint64_t eval_mod(const Polynomial& p, const std::vector<std::uint64_t>& point) {
  std::uint64_t acc = 0;
  for (const auto& [e, c] : p.terms()) {
    std::uint64_t t = mod_of(c);
    for (std::size_t w = 0; w < p.nvars(); ++w) {
      if (e[w] != 0) t = t * mod_pow(point[w], e[w]) % kImagePrime;
    }
    acc = (acc + t) % kImagePrime;
  }
  return acc;
}

std::uint32_t univar_gcd_degree(std::vector<std::uint64_t> a,
                                std::vector<std::uint64_t> b) {
  auto deg = [](const std::vector<std::uint64_t>& p) { return p.size() - 1; };
  auto is_zero = [](const std::vector<std::uint64_t>& p) {
    return p.size() == 1 && p[0] == 0;
  };
  while (!is_zero(b)) {
    if (deg(a) < deg(b)) {
      std::swap(a, b);
      continue;
    }
    // a -= lead(a)/lead(b) * x^(da-db) * b, repeated: plain remainder in F_p.
    while (!is_zero(a) && deg(a) >= deg(b)) {
      const std::uint64_t q =
          a.back() * mod_pow(b.back(), kImagePrime - 2) % kImagePrime;
      const std::size_t shift = deg(a) - deg(b);
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[i + shift] = (a[i + shift] + kImagePrime - q * b[i] % kImagePrime) % kImagePrime;
      }
      while (a.size() > 1 && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  return static_cast<std::uint32_t>(deg(a));
}

// Sound coprimality screen: any common divisor keeps its var-degree in an
// image where the leading var-coefficients of both inputs survive, because
// those factor through the divisor's leading var-coefficient. A degree-0
// image gcd therefore certifies that the gcd is free of var; an unlucky image
// can only hide a certificate, never forge one. False when inconclusive.
bool coprime_in_var_by_image(const Polynomial& a, const Polynomial& b, std::size_t var) {
  const Polynomial la = coeff_wrt(a, var, a.degree_in(var));
  const Polynomial lb = coeff_wrt(b, var, b.degree_in(var));
  std::vector<std::uint64_t> point(a.nvars(), 0);
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  for (int attempt = 1; attempt <= 10; ++attempt) {
    for (std::size_t w = 0; w < a.nvars(); ++w) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      point[w] = (state >> 33) % (kImagePrime - 1) + 1;
    }
    if (eval_mod(la, point) == 0 || eval_mod(lb, point) == 0) continue;
    return univar_gcd_degree(image_in_var(a, var, point),
                             image_in_var(b, var, point)) == 0;
  }
  return false;
}

}  // namespace

namespace {

// Exponent vector of the largest monomial dividing every term.
Exponents min_exponents(const Polynomial& p) {
  Exponents m(p.nvars(), UINT32_MAX);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t v = 0; v < m.size(); ++v) m[v] = std::min(m[v], e[v]);
  }
  return m;
}

Polynomial strip_monomial(const Polynomial& p, const Exponents& m) {
  Polynomial r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    for (std::size_t v = 0; v < f.size(); ++v) f[v] -= m[v];
    r.add_term(f, c);
  }
  return r;
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  assert(a.nvars() == b.nvars());
  if (a.is_zero()) return sign_normalized(b);
  if (b.is_zero()) return sign_normalized(a);
  if (a.is_constant() || b.is_constant()) {
    return constant(a.nvars(), boost::multiprecision::gcd(a.content(), b.content()));
  }
  // Split off monomial factors: they are common divisors exactly to the
  // min-exponent overlap, and stripping them shrinks everything downstream.
  const Exponents ma = min_exponents(a);
  const Exponents mb = min_exponents(b);
  Exponents shared(a.nvars());
  bool strip = false;
  for (std::size_t v = 0; v < shared.size(); ++v) {
    shared[v] = std::min(ma[v], mb[v]);
    if (ma[v] != 0 || mb[v] != 0) strip = true;
  }
  if (strip) {
    const Polynomial g = gcd(strip_monomial(a, ma), strip_monomial(b, mb));
    return g * monomial(a.nvars(), shared, 1);
  }
  const std::uint64_t both = a.vars_used() & b.vars_used();
  if (both == 0) {
    // No shared variable: only the integer contents can match.
    return constant(a.nvars(), boost::multiprecision::gcd(a.content(), b.content()));
  }
  // Main variable: shared, smallest worst-case degree to keep the remainder
  // sequence short.
  std::size_t var = 0;
  std::uint32_t best = UINT32_MAX;
  for (std::size_t v = 0; v < a.nvars(); ++v) {
    if (!(both >> v & 1)) continue;
    const std::uint32_t d = std::max(a.degree_in(v), b.degree_in(v));
    if (d < best) {
      best = d;
      var = v;
    }
  }
  const Polynomial ca = content_wrt(a, var);
  const Polynomial cb = content_wrt(b, var);
  const Polynomial c = gcd(ca, cb);
  Polynomial A = *div_exact(a, ca);
  Polynomial B = *div_exact(b, cb);
  if (coprime_in_var_by_image(A, B, var)) {
    return sign_normalized(c);
  }
  if (A.degree_in(var) < B.degree_in(var)) std::swap(A, B);
  // One poly often divides the other outright (squares over their root, for
  // instance); exact division aborts cheaply when it does not.
  if (auto q = div_exact(A, B)) {
    (void)q;
    return sign_normalized(c * B);
  }
  // Primitive pseudo-remainder sequence in the main variable.
  Polynomial g(a.nvars());
  while (true) {
    Polynomial r = prem(A, B, var);
    if (r.is_zero()) {
      g = B;
      break;
    }
    if (r.degree_in(var) == 0) {
      g = constant(a.nvars(), 1);
      break;
    }
    r = *div_exact(r, content_wrt(r, var));
    A = std::move(B);
    B = std::move(r);
  }
  return sign_normalized(c * g);
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

std::uint32_t Polynomial::total_degree() const {
  if (terms_.empty()) return 0;
  const Exponents& e = terms_.begin()->first;  // grlex leader has max degree
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    f[var] -= 1;
    r.add_term(f, c * e[var]);
  }
  return r;
}

Rat rat_pow(const Rat& base, std::uint32_t e) {
  Rat r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
  assert(point.size() == nvars_);
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (e[v] != 0) t *= rat_pow(point[v], e[v]);
    }
    acc += t;
  }
  return acc;
}

std::uint64_t Polynomial::vars_used() const {
  std::uint64_t mask = 0;
  for (const auto& [e, c] : terms_) {
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (e[v] != 0) mask |= std::uint64_t{1} << v;
    }
  }
  return mask;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  assert(names.size() == nvars_);
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    if (first) {
      if (neg) out << '-';
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    const Int mag = boost::multiprecision::abs(c);
    bool printed = false;
    const bool has_vars =
        std::any_of(e.begin(), e.end(), [](std::uint32_t k) { return k != 0; });
    if (mag != 1 || !has_vars) {
      out << mag;
      printed = true;
    }
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      if (printed) out << '*';
      out << names[v];
      if (e[v] > 1) out << '^' << e[v];
      printed = true;
    }
  }
  return out.str();
}

}  // namespace lightframe

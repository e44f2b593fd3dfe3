#include "lightframe/spaceform.hpp"

#include "lightframe/error.hpp"

namespace lightframe {

namespace {

// g(phi X, phi Y) over coordinate fields, as a (0,2) matrix of expressions.
TensorField phi_pullback(const Metric& m, const GffStructure& s) {
  const Chart& chart = s.phi.chart();
  const std::size_t n = chart.dim();
  TensorField out(chart, 0, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      RationalExpr sum = chart.zero();
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          sum = sum + m.g(k, l) * s.phi(k, i) * s.phi(l, j);
        }
      }
      out(i, j) = sum;
      out(j, i) = std::move(sum);
    }
  }
  return out;
}

}  // namespace

TensorField space_form_model(const Metric& m, const GffStructure& s, const Rat& c) {
  validate_structure(s);
  const Chart& chart = s.phi.chart();
  const std::size_t n = chart.dim();
  const TensorField gphi = phi_pullback(m, s);
  const TensorField two_form = fundamental_two_form(m.g, s);
  const TensorField etab = eta_bar(s);

  const RationalExpr quarter = chart.scalar(Rat(1, 4));
  const RationalExpr e = chart.scalar(Rat(s.epsilon_sum()));
  const RationalExpr cc = chart.scalar(c);
  const RationalExpr holo = -(cc + chart.scalar(Rat(3)) * e) * quarter;
  const RationalExpr skew = -(cc - e) * quarter;
  const RationalExpr two = chart.scalar(Rat(2));

  TensorField r(chart, 0, 4);
  std::vector<std::size_t> idx(4, 0);
  do {
    const std::size_t x = idx[0], y = idx[1], z = idx[2], w = idx[3];
    RationalExpr value =
        holo * (gphi(y, z) * gphi(x, w) - gphi(x, z) * gphi(y, w)) +
        skew * (two_form(w, x) * two_form(z, y) - two_form(z, x) * two_form(w, y) +
                two * two_form(x, y) * two_form(w, z)) -
        (etab.at({w}) * etab.at({x}) * gphi(z, y) - etab.at({w}) * etab.at({y}) * gphi(z, x) +
         etab.at({y}) * etab.at({z}) * gphi(w, x) - etab.at({z}) * etab.at({x}) * gphi(w, y));
    r.at(idx) = std::move(value);
  } while (advance_multi_index(idx, n));
  return r;
}

std::optional<Rat> fit_space_form_constant(const TensorField& r, const Metric& m,
                                           const GffStructure& s) {
  if (r.contravariant_rank() != 0 || r.covariant_rank() != 4) {
    throw MathError("fit_space_form_constant expects a (0,4) field");
  }
  const TensorField base = space_form_model(m, s, Rat(0));
  TensorField slope = space_form_model(m, s, Rat(1)) - base;
  const std::size_t total = r.components().size();
  for (std::size_t i = 0; i < total; ++i) {
    const RationalExpr& coeff = slope.components()[i];
    if (coeff.is_zero()) continue;
    const RationalExpr candidate = (r.components()[i] - base.components()[i]) / coeff;
    if (!candidate.is_constant()) return std::nullopt;
    const Rat c = candidate.constant_value();
    if (r == base + slope.scaled(candidate)) return c;
    return std::nullopt;
  }
  // Degenerate model: the fit is independent of c; report c = 0 iff exact.
  if (r == base) return Rat(0);
  return std::nullopt;
}

}  // namespace lightframe

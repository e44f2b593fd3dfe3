#include "lightframe/hypersurface.hpp"

#include <string>
#include <utility>

#include "lightframe/calculus.hpp"
#include "lightframe/error.hpp"

namespace lightframe {

namespace {

std::string ordinal(std::size_t i) { return std::to_string(i + 1); }

// Pulled-back metric coordinate matrix (gbar_AB o f).
Matrix pulled_metric(const Immersion& imm, const Metric& m) {
  const std::size_t dim = imm.ambient_dim();
  Matrix gf(dim, std::vector<RationalExpr>(dim));
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      gf[a][b] = pullback_scalar(imm, m.g(a, b));
    }
  }
  return gf;
}

RationalExpr pairing_along(const Matrix& gf, const FieldAlong& x, const FieldAlong& y) {
  RationalExpr sum = RationalExpr::zero(gf.empty() ? 0 : gf[0][0].nvars());
  for (std::size_t a = 0; a < gf.size(); ++a) {
    if (x.ambient[a].is_zero()) continue;
    for (std::size_t b = 0; b < gf.size(); ++b) {
      sum = sum + gf[a][b] * x.ambient[a] * y.ambient[b];
    }
  }
  return sum;
}

// Least common multiple of denominator polynomials.
Polynomial den_lcm(const std::vector<RationalExpr>& v) {
  Polynomial l = Polynomial::constant(v.empty() ? 0 : v[0].nvars(), 1);
  for (const RationalExpr& e : v) {
    const Polynomial g = Polynomial::gcd(l, e.den());
    auto q = Polynomial::div_exact(e.den(), g);
    l = l * *q;
  }
  return l;
}

}  // namespace

Immersion make_immersion(Chart u_chart, Chart x_chart, std::vector<RationalExpr> f) {
  const std::size_t m = x_chart.dim();
  if (u_chart.dim() + 1 != m) {
    throw MathError("immersion must drop exactly one dimension: u has " +
                    std::to_string(u_chart.dim()) + " coordinates, x has " + std::to_string(m));
  }
  if (f.size() != m) {
    throw MathError("immersion needs " + std::to_string(m) + " component functions, got " +
                    std::to_string(f.size()));
  }
  Immersion imm{std::move(u_chart), std::move(x_chart), std::move(f), {}};
  for (const RationalExpr& comp : imm.f) {
    if (comp.nvars() != imm.u_chart.dim()) {
      throw MathError("immersion component is not an expression over the source chart");
    }
  }
  imm.jacobian.assign(imm.dim(), std::vector<RationalExpr>(m));
  for (std::size_t a = 0; a < imm.dim(); ++a) {
    for (std::size_t A = 0; A < m; ++A) {
      imm.jacobian[a][A] = imm.f[A].derivative(a);
    }
  }
  if (matrix_rank(imm.jacobian) != imm.dim()) {
    throw MathError("immersion Jacobian does not have full rank " + std::to_string(imm.dim()));
  }
  return imm;
}

RationalExpr pullback_scalar(const Immersion& imm, const RationalExpr& a) {
  return a.substitute(imm.f);
}

TensorField pullback_components(const Immersion& imm, const TensorField& t) {
  return substitute_components(t, imm.f, imm.u_chart);
}

FieldAlong restrict_field(const Immersion& imm, const TensorField& v) {
  if (v.contravariant_rank() != 1 || v.covariant_rank() != 0) {
    throw MathError("restrict_field expects a (1,0) field");
  }
  if (v.chart() != imm.x_chart) {
    throw MathError("restrict_field expects ambient components");
  }
  FieldAlong out;
  out.ambient.reserve(imm.ambient_dim());
  for (std::size_t A = 0; A < imm.ambient_dim(); ++A) {
    out.ambient.push_back(pullback_scalar(imm, v.at({A})));
  }
  out.coeffs = tangency_coeffs(imm, out.ambient);
  return out;
}

FieldAlong tangent_field(const Immersion& imm, std::vector<RationalExpr> coeffs) {
  if (coeffs.size() != imm.dim()) {
    throw MathError("tangent_field coefficient count mismatch");
  }
  FieldAlong out;
  out.ambient.assign(imm.ambient_dim(), imm.u_chart.zero());
  for (std::size_t A = 0; A < imm.ambient_dim(); ++A) {
    for (std::size_t a = 0; a < imm.dim(); ++a) {
      out.ambient[A] = out.ambient[A] + coeffs[a] * imm.jacobian[a][A];
    }
  }
  out.coeffs = std::move(coeffs);
  return out;
}

TensorField induced_metric(const Immersion& imm, const Metric& m) {
  const Matrix gf = pulled_metric(imm, m);
  TensorField out(imm.u_chart, 0, 2);
  for (std::size_t a = 0; a < imm.dim(); ++a) {
    for (std::size_t b = a; b < imm.dim(); ++b) {
      RationalExpr sum = imm.u_chart.zero();
      for (std::size_t A = 0; A < imm.ambient_dim(); ++A) {
        if (imm.jacobian[a][A].is_zero()) continue;
        for (std::size_t B = 0; B < imm.ambient_dim(); ++B) {
          sum = sum + gf[A][B] * imm.jacobian[a][A] * imm.jacobian[b][B];
        }
      }
      out(a, b) = sum;
      out(b, a) = std::move(sum);
    }
  }
  return out;
}

std::vector<RationalExpr> jacobian_minors(const Immersion& imm) {
  std::vector<RationalExpr> minors;
  minors.reserve(imm.ambient_dim());
  for (std::size_t skip = 0; skip < imm.ambient_dim(); ++skip) {
    Matrix sub(imm.dim(), std::vector<RationalExpr>());
    for (std::size_t a = 0; a < imm.dim(); ++a) {
      sub[a].reserve(imm.dim());
      for (std::size_t A = 0; A < imm.ambient_dim(); ++A) {
        if (A != skip) sub[a].push_back(imm.jacobian[a][A]);
      }
    }
    minors.push_back(determinant(sub));
  }
  return minors;
}

Matrix metric_minors(const Metric& m) {
  const Matrix g = metric_matrix(m.g);
  const std::size_t dim = g.size();
  Matrix minors(dim, std::vector<RationalExpr>(dim));
  for (std::size_t A = 0; A < dim; ++A) {
    for (std::size_t B = 0; B < dim; ++B) {
      Matrix sub;
      sub.reserve(dim - 1);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i == A) continue;
        std::vector<RationalExpr> row;
        row.reserve(dim - 1);
        for (std::size_t j = 0; j < dim; ++j) {
          if (j != B) row.push_back(g[i][j]);
        }
        sub.push_back(std::move(row));
      }
      minors[A][B] = determinant(sub);
    }
  }
  return minors;
}

LightlikeVerdict lightlike_test(const Immersion& imm, const Metric& m) {
  const TensorField induced = induced_metric(imm, m);
  Matrix gm(imm.dim(), std::vector<RationalExpr>(imm.dim()));
  for (std::size_t a = 0; a < imm.dim(); ++a) {
    for (std::size_t b = 0; b < imm.dim(); ++b) gm[a][b] = induced.at({a, b});
  }
  const RationalExpr direct = determinant(gm);

  const std::vector<RationalExpr> d = jacobian_minors(imm);
  const Matrix minors = metric_minors(m);
  RationalExpr expansion = imm.u_chart.zero();
  for (std::size_t A = 0; A < imm.ambient_dim(); ++A) {
    if (d[A].is_zero()) continue;
    for (std::size_t B = 0; B < imm.ambient_dim(); ++B) {
      if (d[B].is_zero() || minors[A][B].is_zero()) continue;
      expansion = expansion + pullback_scalar(imm, minors[A][B]) * d[A] * d[B];
    }
  }
  if (direct != expansion) {
    throw MathError("lightlike test routes disagree: det = " +
                    direct.to_string(imm.u_chart.coordinates()) + ", minor expansion = " +
                    expansion.to_string(imm.u_chart.coordinates()));
  }
  return LightlikeVerdict{direct.is_zero(), direct};
}

std::optional<std::vector<RationalExpr>> tangency_coeffs(
    const Immersion& imm, const std::vector<RationalExpr>& ambient_over_u) {
  const std::size_t m = imm.ambient_dim();
  const std::size_t k = imm.dim();
  if (ambient_over_u.size() != m) {
    throw MathError("tangency test expects one component per ambient coordinate");
  }
  Matrix augmented(m, std::vector<RationalExpr>(k + 1));
  for (std::size_t A = 0; A < m; ++A) {
    for (std::size_t a = 0; a < k; ++a) augmented[A][a] = imm.jacobian[a][A];
    augmented[A][k] = ambient_over_u[A];
  }
  std::vector<std::size_t> pivots;
  const Matrix reduced = rref(augmented, &pivots);
  std::vector<RationalExpr> solution(k, imm.u_chart.zero());
  for (std::size_t row = 0; row < pivots.size(); ++row) {
    if (pivots[row] == k) return std::nullopt;  // inconsistent system
    solution[pivots[row]] = reduced[row][k];
  }
  return solution;
}

std::optional<std::vector<RationalExpr>> tangency_test(const Immersion& imm,
                                                       const TensorField& v) {
  if (v.contravariant_rank() != 1 || v.covariant_rank() != 0 || v.chart() != imm.x_chart) {
    throw MathError("tangency test expects an ambient (1,0) field");
  }
  std::vector<RationalExpr> ambient;
  ambient.reserve(imm.ambient_dim());
  for (std::size_t A = 0; A < imm.ambient_dim(); ++A) {
    ambient.push_back(pullback_scalar(imm, v.at({A})));
  }
  return tangency_coeffs(imm, ambient);
}

FieldAlong radical_section(const Immersion& imm, const Metric& m,
                           const std::optional<TensorField>& candidate) {
  const TensorField induced = induced_metric(imm, m);
  Matrix gm(imm.dim(), std::vector<RationalExpr>(imm.dim()));
  for (std::size_t a = 0; a < imm.dim(); ++a) {
    for (std::size_t b = 0; b < imm.dim(); ++b) gm[a][b] = induced.at({a, b});
  }

  if (candidate) {
    FieldAlong field = restrict_field(imm, *candidate);
    if (!field.tangent()) {
      throw MathError("candidate radical section is not tangent to the hypersurface");
    }
    for (std::size_t a = 0; a < imm.dim(); ++a) {
      RationalExpr sum = imm.u_chart.zero();
      for (std::size_t b = 0; b < imm.dim(); ++b) sum = sum + gm[a][b] * (*field.coeffs)[b];
      if (!sum.is_zero()) {
        throw MathError("candidate radical section is not in the induced metric kernel");
      }
    }
    return field;
  }

  const std::vector<std::vector<RationalExpr>> kernel = kernel_basis(gm);
  if (kernel.size() != 1) {
    throw MathError("induced metric kernel has dimension " + std::to_string(kernel.size()) +
                    "; a lightlike hypersurface needs exactly 1");
  }
  std::vector<RationalExpr> coeffs = kernel.front();
  const Polynomial clear = den_lcm(coeffs);
  const RationalExpr clear_expr{clear};
  Polynomial content = Polynomial::zero(imm.u_chart.dim());
  for (RationalExpr& c : coeffs) {
    c = c * clear_expr;
    content = Polynomial::gcd(content, c.num());
  }
  if (!content.is_zero() && !content.is_one()) {
    const RationalExpr content_expr{content};
    for (RationalExpr& c : coeffs) c = c / content_expr;
  }
  for (const RationalExpr& c : coeffs) {
    if (c.is_zero()) continue;
    if (c.num().leading().second < 0) {
      for (RationalExpr& e : coeffs) e = -e;
    }
    break;
  }
  return tangent_field(imm, std::move(coeffs));
}

FieldAlong transversal_section(const Immersion& imm, const Metric& m, const FieldAlong& e,
                               const FieldAlong& z) {
  const Matrix gf = pulled_metric(imm, m);
  const RationalExpr gze = pairing_along(gf, z, e);
  if (gze.is_zero()) {
    throw MathError("auxiliary field pairs to zero with the radical section");
  }
  const RationalExpr gzz = pairing_along(gf, z, z);
  const RationalExpr two = imm.u_chart.scalar(Rat(2));
  FieldAlong n;
  n.ambient.reserve(imm.ambient_dim());
  for (std::size_t A = 0; A < imm.ambient_dim(); ++A) {
    n.ambient.push_back((z.ambient[A] - gzz / (two * gze) * e.ambient[A]) / gze);
  }
  return n;
}

FieldAlong scan_transversal(const Immersion& imm, const Metric& m, const GffStructure& s,
                            const FieldAlong& e) {
  const Matrix gf = pulled_metric(imm, m);
  const std::size_t dim = imm.ambient_dim();
  std::vector<FieldAlong> candidates;
  for (std::size_t A = 0; A < dim; ++A) {
    FieldAlong w;
    w.ambient.assign(dim, imm.u_chart.zero());
    w.ambient[A] = imm.u_chart.one();
    for (std::size_t a = 0; a < s.order(); ++a) {
      const RationalExpr dual = pullback_scalar(imm, s.eta[a].at({A}));
      if (dual.is_zero()) continue;
      for (std::size_t B = 0; B < dim; ++B) {
        w.ambient[B] = w.ambient[B] - dual * pullback_scalar(imm, s.xi[a].at({B}));
      }
    }
    candidates.push_back(std::move(w));
  }
  for (std::size_t A = 0; A < dim; ++A) {
    FieldAlong w;
    w.ambient.assign(dim, imm.u_chart.zero());
    w.ambient[A] = imm.u_chart.one();
    candidates.push_back(std::move(w));
  }
  for (const FieldAlong& w : candidates) {
    if (!pairing_along(gf, w, e).is_zero()) return w;
  }
  throw MathError("no auxiliary field with nonzero radical pairing among coordinate candidates");
}

LightlikeFrame characteristic_screen(const Immersion& imm, const Metric& m,
                                     const GffStructure& s, const FieldAlong& e,
                                     const FieldAlong& z, const FieldAlong& n) {
  const std::size_t dim = imm.ambient_dim();
  const std::size_t r = s.order();
  if ((dim - r) % 2 != 0 || dim - r < 4) {
    throw MathError("characteristic screen needs n >= 2 where the ambient dimension is 2n + " +
                    std::to_string(r) + "; got " + std::to_string(dim));
  }
  if (!e.tangent()) throw MathError("radical section must be tangent");

  LightlikeFrame frame{imm, s, e, z, n, {}, {}, {}, {}, {}, {}, {}, {}, 0};
  const Matrix gf = pulled_metric(imm, m);

  for (std::size_t a = 0; a < r; ++a) {
    FieldAlong xi = restrict_field(imm, s.xi[a]);
    if (!xi.tangent()) {
      throw MathError("characteristic field xi_" + ordinal(a) +
                      " is not tangent; the hypersurface is not characteristic");
    }
    frame.xi.push_back(std::move(xi));
  }

  Matrix phif(dim, std::vector<RationalExpr>(dim));
  for (std::size_t A = 0; A < dim; ++A) {
    for (std::size_t B = 0; B < dim; ++B) phif[A][B] = pullback_scalar(imm, s.phi(A, B));
  }
  auto apply_phi = [&](const FieldAlong& x) {
    FieldAlong out;
    out.ambient.assign(dim, imm.u_chart.zero());
    for (std::size_t A = 0; A < dim; ++A) {
      for (std::size_t B = 0; B < dim; ++B) {
        if (phif[A][B].is_zero() || x.ambient[B].is_zero()) continue;
        out.ambient[A] = out.ambient[A] + phif[A][B] * x.ambient[B];
      }
    }
    out.coeffs = tangency_coeffs(imm, out.ambient);
    return out;
  };
  frame.phiE = apply_phi(frame.E);
  frame.phiN = apply_phi(frame.N);
  if (!frame.phiE.tangent()) throw MathError("phibar of the radical section is not tangent");
  if (!frame.phiN.tangent()) throw MathError("phibar of the transversal section is not tangent");

  auto negated = [](const FieldAlong& x) {
    FieldAlong out;
    out.ambient.reserve(x.ambient.size());
    for (const RationalExpr& c : x.ambient) out.ambient.push_back(-c);
    if (x.coeffs) {
      out.coeffs.emplace();
      out.coeffs->reserve(x.coeffs->size());
      for (const RationalExpr& c : *x.coeffs) out.coeffs->push_back(-c);
    }
    return out;
  };
  frame.U = negated(frame.phiN);
  frame.V = negated(frame.phiE);

  const RationalExpr cross = pairing_along(gf, frame.phiN, frame.phiE);
  if (!cross.is_one()) {
    throw MathError("g(phibar N, phibar E) = " + cross.to_string(imm.u_chart.coordinates()) +
                    "; the frame requires 1");
  }
  Matrix pair_gram{{pairing_along(gf, frame.phiE, frame.phiE), cross},
                   {cross, pairing_along(gf, frame.phiN, frame.phiN)}};
  if (determinant(pair_gram).is_zero()) {
    throw MathError("the phibar pair spans a degenerate plane");
  }

  frame.screen = frame.xi;
  auto coeff_rank = [&](const std::vector<FieldAlong>& fields) {
    Matrix rows;
    for (const FieldAlong& f : fields) rows.push_back(*f.coeffs);
    return matrix_rank(rows);
  };
  for (std::size_t a = 0; a < imm.dim() && frame.screen.size() + 3 < imm.dim(); ++a) {
    std::vector<RationalExpr> coeffs(imm.dim(), imm.u_chart.zero());
    coeffs[a] = imm.u_chart.one();
    FieldAlong cand = tangent_field(imm, coeffs);
    const RationalExpr toward_n = pairing_along(gf, cand, frame.N);
    for (std::size_t i = 0; i < imm.dim(); ++i) {
      (*cand.coeffs)[i] = (*cand.coeffs)[i] - toward_n * (*frame.E.coeffs)[i];
    }
    cand = tangent_field(imm, *cand.coeffs);
    std::vector<FieldAlong> extended = frame.screen;
    extended.push_back(cand);
    extended.push_back(frame.phiE);
    extended.push_back(frame.phiN);
    if (coeff_rank(extended) == extended.size()) {
      frame.screen.push_back(std::move(cand));
    }
  }
  frame.screen.push_back(frame.phiE);
  frame.screen.push_back(frame.phiN);
  if (frame.screen.size() != imm.dim() - 1) {
    throw MathError("screen completion found " + std::to_string(frame.screen.size()) +
                    " fields; the screen needs " + std::to_string(imm.dim() - 1));
  }

  const std::size_t k = frame.screen.size();
  Matrix gram(k, std::vector<RationalExpr>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      gram[i][j] = pairing_along(gf, frame.screen[i], frame.screen[j]);
    }
  }
  if (determinant(gram).is_zero()) throw MathError("screen restriction of the metric is degenerate");

  if (!pairing_along(gf, frame.N, frame.E).is_one() ||
      !pairing_along(gf, frame.N, frame.N).is_zero() ||
      !pairing_along(gf, frame.E, frame.E).is_zero()) {
    throw MathError("transversal pairings violate g(N,E) = 1, g(N,N) = 0, g(E,E) = 0");
  }
  for (const FieldAlong& w : frame.screen) {
    if (!pairing_along(gf, frame.N, w).is_zero()) {
      throw MathError("transversal section is not orthogonal to the screen");
    }
    if (!pairing_along(gf, frame.E, w).is_zero()) {
      throw MathError("radical section is not orthogonal to the screen");
    }
  }
  {
    std::vector<FieldAlong> all = frame.screen;
    all.push_back(frame.E);
    if (coeff_rank(all) != imm.dim()) {
      throw MathError("radical and screen do not span the tangent bundle");
    }
  }

  Matrix ortho(2, std::vector<RationalExpr>(k));
  for (std::size_t j = 0; j < k; ++j) {
    ortho[0][j] = pairing_along(gf, frame.screen[j], frame.phiE);
    ortho[1][j] = pairing_along(gf, frame.screen[j], frame.phiN);
  }
  for (const std::vector<RationalExpr>& combo : kernel_basis(ortho)) {
    std::vector<RationalExpr> coeffs(imm.dim(), imm.u_chart.zero());
    for (std::size_t j = 0; j < k; ++j) {
      if (combo[j].is_zero()) continue;
      for (std::size_t i = 0; i < imm.dim(); ++i) {
        coeffs[i] = coeffs[i] + combo[j] * (*frame.screen[j].coeffs)[i];
      }
    }
    frame.d0.push_back(tangent_field(imm, std::move(coeffs)));
  }
  if (frame.d0.size() + 2 != k) {
    throw MathError("the phibar pair is not complementary inside the screen");
  }

  frame.d = frame.d0;
  frame.d.push_back(frame.V);
  frame.d.push_back(frame.E);

  for (const RationalExpr& entry : congruent_diagonal(gram)) {
    if (!entry.is_constant()) {
      throw MathError("screen signature is not constant over the chart");
    }
    if (entry.constant_value() < 0) ++frame.screen_index;
  }
  return frame;
}

std::vector<std::vector<RationalExpr>> screen_perp(const LightlikeFrame& frame,
                                                   const Metric& m) {
  const Immersion& imm = frame.imm;
  const Matrix gf = pulled_metric(imm, m);
  const std::size_t dim = imm.ambient_dim();
  Matrix system(frame.screen.size(), std::vector<RationalExpr>(dim));
  for (std::size_t i = 0; i < frame.screen.size(); ++i) {
    for (std::size_t A = 0; A < dim; ++A) {
      RationalExpr sum = imm.u_chart.zero();
      for (std::size_t B = 0; B < dim; ++B) {
        sum = sum + gf[A][B] * frame.screen[i].ambient[B];
      }
      system[i][A] = std::move(sum);
    }
  }
  return kernel_basis(system);
}

ObstructionVerdict characteristic_obstruction(const Metric& m, const GffStructure& s) {
  const std::size_t dim = m.g.dim();
  if (dim < s.order() + 4) {
    return {true,
            "a characteristic screen carries the fields xi_1..xi_r, phibar E and phibar N, "
            "which needs ambient dimension 2n + r with n >= 2; here 2n = " +
                std::to_string(dim - s.order()) +
                ", so no characteristic lightlike hypersurface exists"};
  }
  std::vector<bool> is_xi_column(dim, false);
  for (const TensorField& xi : s.xi) {
    std::size_t hits = 0;
    std::size_t column = 0;
    for (std::size_t A = 0; A < dim; ++A) {
      if (xi.at({A}).is_zero()) continue;
      ++hits;
      column = A;
    }
    if (hits != 1 || !xi.at({column}).is_one()) {
      return {false, "characteristic fields are not coordinate fields; no existence verdict"};
    }
    is_xi_column[column] = true;
  }

  const Matrix minors = metric_minors(m);
  Matrix block;
  for (std::size_t A = 0; A < dim; ++A) {
    if (is_xi_column[A]) continue;
    std::vector<RationalExpr> row;
    for (std::size_t B = 0; B < dim; ++B) {
      if (is_xi_column[B]) continue;
      if (!minors[A][B].is_constant()) {
        return {false, "the residual minor block is not constant; no existence verdict"};
      }
      row.push_back(minors[A][B]);
    }
    block.push_back(std::move(row));
  }

  int sign = 0;
  for (const RationalExpr& entry : congruent_diagonal(block)) {
    const Rat value = entry.constant_value();
    const int entry_sign = value == 0 ? 0 : (value > 0 ? 1 : -1);
    if (entry_sign == 0) return {false, "the residual minor block is degenerate; no verdict"};
    if (sign == 0) sign = entry_sign;
    if (entry_sign != sign) {
      return {false, "the residual minor block is indefinite; lightlike minors may cancel"};
    }
  }
  return {true,
          "tangency of the characteristic fields zeroes their Jacobian minors, and the "
          "remaining minor block is a constant definite form, so a vanishing induced "
          "determinant forces every maximal minor to vanish — contradicting the immersion "
          "rank; no characteristic lightlike hypersurface exists"};
}

}  // namespace lightframe

#include "lightframe/induced.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lightframe/error.hpp"

namespace lightframe {

namespace {

std::vector<RationalExpr> zero_row(const Chart& chart, std::size_t n) {
  return std::vector<RationalExpr>(n, chart.zero());
}

}  // namespace

InducedGeometry::InducedGeometry(LightlikeFrame frame, const Metric& ambient_metric,
                                 const TensorField& ambient_christoffel)
    : frame_(std::move(frame)) {
  const Immersion& imm = frame_.imm;
  const std::size_t m = imm.ambient_dim();
  const std::size_t n = imm.dim();
  if (ambient_christoffel.chart() != imm.x_chart || ambient_christoffel.contravariant_rank() != 1 ||
      ambient_christoffel.covariant_rank() != 2) {
    throw MathError("induced geometry needs ambient (1,2) connection coefficients on the immersion chart");
  }
  ambient_names_ = imm.x_chart.coordinates();
  source_names_ = imm.u_chart.coordinates();

  gf_.assign(m, zero_row(imm.u_chart, m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      gf_[a][b] = pullback_scalar(imm, ambient_metric.g(a, b));
    }
  }
  gammaf_.assign(m, Matrix(m, zero_row(imm.u_chart, m)));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        gammaf_[a][b][c] = pullback_scalar(imm, ambient_christoffel(a, b, c));
      }
    }
  }
  const GffStructure& s = frame_.structure;
  phif_.assign(m, zero_row(imm.u_chart, m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      phif_[a][b] = pullback_scalar(imm, s.phi(a, b));
    }
  }
  etaf_.assign(s.order(), zero_row(imm.u_chart, m));
  for (std::size_t al = 0; al < s.order(); ++al) {
    for (std::size_t a = 0; a < m; ++a) {
      etaf_[al][a] = pullback_scalar(imm, s.eta[al].at({a}));
    }
  }
  epsilon_ = s.epsilon;

  basis_.push_back(frame_.E);
  names_.push_back("E");
  std::size_t generic = 0;
  for (const FieldAlong& w : frame_.d0) {
    basis_.push_back(w);
    std::string label;
    for (std::size_t al = 0; al < frame_.xi.size(); ++al) {
      if (w == frame_.xi[al]) {
        label = "xi_" + std::to_string(al + 1);
        break;
      }
    }
    if (label.empty()) label = "W_" + std::to_string(++generic);
    names_.push_back(label);
  }
  basis_.push_back(frame_.U);
  names_.push_back("U");
  basis_.push_back(frame_.V);
  names_.push_back("V");
  if (basis_.size() != n) {
    throw MathError("tangent basis has " + std::to_string(basis_.size()) + " fields on a " +
                    std::to_string(n) + "-dimensional hypersurface");
  }
  basis_columns_.assign(n, zero_row(imm.u_chart, n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!basis_[i].tangent()) throw MathError("tangent basis field lacks source coefficients");
    for (std::size_t a = 0; a < n; ++a) basis_columns_[a][i] = (*basis_[i].coeffs)[a];
  }
  if (matrix_rank(basis_columns_) != n) throw MathError("tangent basis is degenerate");

  nabla_.assign(n, std::vector<FieldAlong>(n));
  b_.assign(n, zero_row(imm.u_chart, n));
  c_.assign(n, zero_row(imm.u_chart, n));
  tau_.assign(n, imm.u_chart.zero());
  for (std::size_t i = 0; i < n; ++i) {
    tau_[i] = transversal_form(basis_[i]);
    for (std::size_t j = 0; j < n; ++j) {
      FieldAlong amb = ambient_connection(basis_[i], basis_[j]);
      b_[i][j] = pairing(amb, frame_.E);
      if (j > 0) c_[i][j] = pairing(amb, frame_.N);
      std::vector<RationalExpr> comps(m, imm.u_chart.zero());
      for (std::size_t a = 0; a < m; ++a) {
        comps[a] = amb.ambient[a] - b_[i][j] * frame_.N.ambient[a];
      }
      auto coeffs = tangency_coeffs(imm, comps);
      if (!coeffs) {
        throw MathError("induced connection left the tangent bundle on (" + names_[i] + ", " +
                        names_[j] + ")");
      }
      nabla_[i][j] = FieldAlong{std::move(comps), std::move(coeffs)};
    }
  }
}

std::size_t InducedGeometry::basis_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw MathError("no tangent basis field named " + name);
}

RationalExpr InducedGeometry::pairing(const FieldAlong& x, const FieldAlong& y) const {
  RationalExpr out = chart().zero();
  for (std::size_t a = 0; a < x.ambient.size(); ++a) {
    if (x.ambient[a].is_zero()) continue;
    for (std::size_t b = 0; b < y.ambient.size(); ++b) {
      out += gf_[a][b] * x.ambient[a] * y.ambient[b];
    }
  }
  return out;
}

FieldAlong InducedGeometry::ambient_connection(const FieldAlong& x, const FieldAlong& y) const {
  if (!x.tangent()) throw MathError("ambient covariant derivative needs a tangent direction");
  const std::size_t m = frame_.imm.ambient_dim();
  const std::vector<RationalExpr>& cx = *x.coeffs;
  std::vector<RationalExpr> out(m, chart().zero());
  for (std::size_t a = 0; a < m; ++a) {
    RationalExpr v = chart().zero();
    for (std::size_t d = 0; d < cx.size(); ++d) {
      if (cx[d].is_zero()) continue;
      v += cx[d] * y.ambient[a].derivative(d);
    }
    for (std::size_t b = 0; b < m; ++b) {
      if (x.ambient[b].is_zero()) continue;
      for (std::size_t c = 0; c < m; ++c) {
        if (y.ambient[c].is_zero() || gammaf_[a][b][c].is_zero()) continue;
        v += gammaf_[a][b][c] * x.ambient[b] * y.ambient[c];
      }
    }
    out[a] = v;
  }
  return FieldAlong{std::move(out), std::nullopt};
}

RationalExpr InducedGeometry::second_fundamental(const FieldAlong& x, const FieldAlong& y) const {
  return pairing(ambient_connection(x, y), frame_.E);
}

RationalExpr InducedGeometry::transversal_form(const FieldAlong& x) const {
  return pairing(ambient_connection(x, frame_.N), frame_.E);
}

RationalExpr InducedGeometry::screen_form(const FieldAlong& x, const FieldAlong& py) const {
  return pairing(ambient_connection(x, py), frame_.N);
}

FieldAlong InducedGeometry::shape_transversal(const FieldAlong& x) const {
  FieldAlong amb = ambient_connection(x, frame_.N);
  RationalExpr t = pairing(amb, frame_.E);
  std::vector<RationalExpr> comps(amb.ambient.size(), chart().zero());
  for (std::size_t a = 0; a < comps.size(); ++a) {
    comps[a] = t * frame_.N.ambient[a] - amb.ambient[a];
  }
  auto coeffs = tangency_coeffs(frame_.imm, comps);
  if (!coeffs) throw MathError("transversal shape operator left the tangent bundle");
  return FieldAlong{std::move(comps), std::move(coeffs)};
}

FieldAlong InducedGeometry::shape_screen(const FieldAlong& x) const {
  RationalExpr t = transversal_form(x);
  FieldAlong nab = induced_connection(x, frame_.E);
  std::vector<RationalExpr> coeffs(frame_.imm.dim(), chart().zero());
  for (std::size_t a = 0; a < coeffs.size(); ++a) {
    coeffs[a] = -((*nab.coeffs)[a] + t * (*frame_.E.coeffs)[a]);
  }
  return tangent_field(frame_.imm, std::move(coeffs));
}

FieldAlong InducedGeometry::induced_connection(const FieldAlong& x, const FieldAlong& y) const {
  FieldAlong amb = ambient_connection(x, y);
  RationalExpr b = pairing(amb, frame_.E);
  std::vector<RationalExpr> comps(amb.ambient.size(), chart().zero());
  for (std::size_t a = 0; a < comps.size(); ++a) {
    comps[a] = amb.ambient[a] - b * frame_.N.ambient[a];
  }
  auto coeffs = tangency_coeffs(frame_.imm, comps);
  if (!coeffs) throw MathError("induced connection left the tangent bundle");
  return FieldAlong{std::move(comps), std::move(coeffs)};
}

FieldAlong InducedGeometry::structure_ambient(const FieldAlong& x) const {
  const std::size_t m = frame_.imm.ambient_dim();
  std::vector<RationalExpr> comps(m, chart().zero());
  for (std::size_t a = 0; a < m; ++a) {
    RationalExpr v = chart().zero();
    for (std::size_t b = 0; b < m; ++b) {
      if (phif_[a][b].is_zero() || x.ambient[b].is_zero()) continue;
      v += phif_[a][b] * x.ambient[b];
    }
    comps[a] = v;
  }
  auto coeffs = tangency_coeffs(frame_.imm, comps);
  return FieldAlong{std::move(comps), std::move(coeffs)};
}

FieldAlong InducedGeometry::structure_tangent(const FieldAlong& x) const {
  FieldAlong pb = structure_ambient(x);
  RationalExpr u = u_form(x);
  std::vector<RationalExpr> comps(pb.ambient.size(), chart().zero());
  for (std::size_t a = 0; a < comps.size(); ++a) {
    comps[a] = pb.ambient[a] - u * frame_.N.ambient[a];
  }
  auto coeffs = tangency_coeffs(frame_.imm, comps);
  if (!coeffs) throw MathError("structure tensor left the tangent bundle");
  return FieldAlong{std::move(comps), std::move(coeffs)};
}

RationalExpr InducedGeometry::u_form(const FieldAlong& x) const { return pairing(x, frame_.V); }

RationalExpr InducedGeometry::eta_form(std::size_t alpha, const FieldAlong& x) const {
  RationalExpr out = chart().zero();
  for (std::size_t a = 0; a < x.ambient.size(); ++a) {
    if (x.ambient[a].is_zero() || etaf_[alpha][a].is_zero()) continue;
    out += etaf_[alpha][a] * x.ambient[a];
  }
  return out;
}

RationalExpr InducedGeometry::directional_scalar(const FieldAlong& x, const RationalExpr& f) const {
  if (!x.tangent()) throw MathError("directional derivative needs a tangent field");
  RationalExpr out = chart().zero();
  for (std::size_t a = 0; a < x.coeffs->size(); ++a) {
    if ((*x.coeffs)[a].is_zero()) continue;
    out += (*x.coeffs)[a] * f.derivative(a);
  }
  return out;
}

FieldAlong InducedGeometry::lie(const FieldAlong& x, const FieldAlong& y) const {
  if (!x.tangent() || !y.tangent()) throw MathError("Lie bracket needs tangent fields");
  const std::size_t n = frame_.imm.dim();
  std::vector<RationalExpr> out(n, chart().zero());
  for (std::size_t a = 0; a < n; ++a) {
    RationalExpr v = chart().zero();
    for (std::size_t b = 0; b < n; ++b) {
      v += (*x.coeffs)[b] * (*y.coeffs)[a].derivative(b) -
           (*y.coeffs)[b] * (*x.coeffs)[a].derivative(b);
    }
    out[a] = v;
  }
  return tangent_field(frame_.imm, std::move(out));
}

std::vector<RationalExpr> InducedGeometry::resolve_in_basis(const FieldAlong& w) const {
  if (!w.tangent()) throw MathError("only tangent fields resolve in the tangent basis");
  auto sol = solve_square(basis_columns_, *w.coeffs);
  if (!sol) throw MathError("tangent basis failed to resolve a field");
  return *sol;
}

FieldAlong InducedGeometry::screen_valued_form(const FieldAlong& x, const FieldAlong& y0) const {
  FieldAlong nab = induced_connection(x, y0);
  std::vector<RationalExpr> c = resolve_in_basis(nab);
  const std::size_t n = basis_.size();
  std::vector<RationalExpr> coeffs(frame_.imm.dim(), chart().zero());
  const std::size_t picks[3] = {0, n - 2, n - 1};  // E, U, V
  for (std::size_t p : picks) {
    for (std::size_t a = 0; a < coeffs.size(); ++a) {
      coeffs[a] += c[p] * (*basis_[p].coeffs)[a];
    }
  }
  return tangent_field(frame_.imm, std::move(coeffs));
}

RationalExpr InducedGeometry::pulled(const RationalExpr& ambient_scalar) const {
  return pullback_scalar(frame_.imm, ambient_scalar);
}

bool InducedGeometry::is_zero_field(const FieldAlong& w) const {
  for (const RationalExpr& v : w.ambient) {
    if (!v.is_zero()) return false;
  }
  return true;
}

std::string InducedGeometry::scalar_str(const RationalExpr& v) const {
  return v.to_string(source_names_);
}

std::string InducedGeometry::field_str(const FieldAlong& w) const {
  std::string out = "(";
  for (std::size_t a = 0; a < w.ambient.size(); ++a) {
    if (a) out += ", ";
    out += scalar_str(w.ambient[a]);
  }
  return out + ")";
}

namespace {

// Accumulates the first failure of a multi-case check.
struct ItemScan {
  bool ok = true;
  std::string witness;

  void fail(std::string w) {
    if (ok) {
      ok = false;
      witness = std::move(w);
    }
  }
  CheckResult result(std::string id, std::string anchor) const {
    return ok ? check_pass(std::move(id), std::move(anchor))
              : check_fail(std::move(id), std::move(anchor), witness);
  }
};

std::vector<RationalExpr> field_difference(const Chart& chart, const FieldAlong& a,
                                           const FieldAlong& b) {
  std::vector<RationalExpr> out(a.ambient.size(), chart.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.ambient[i] - b.ambient[i];
  return out;
}

bool all_zero(const std::vector<RationalExpr>& comps) {
  for (const RationalExpr& v : comps) {
    if (!v.is_zero()) return false;
  }
  return true;
}

}  // namespace

std::vector<CheckResult> InducedGeometry::gauss_weingarten_report() const {
  std::vector<CheckResult> out;
  const std::size_t n = basis_.size();

  ItemScan sym;
  for (std::size_t i = 0; i < n && sym.ok; ++i) {
    for (std::size_t j = i + 1; j < n && sym.ok; ++j) {
      if (b_[i][j] != b_[j][i]) {
        sym.fail("B(" + names_[i] + ", " + names_[j] + ") - B(" + names_[j] + ", " + names_[i] +
                 ") = " + scalar_str(b_[i][j] - b_[j][i]));
      }
    }
  }
  out.push_back(sym.result("b-symmetric", "B(X, Y) = B(Y, X) on the tangent basis"));

  ItemScan rad;
  for (std::size_t i = 0; i < n && rad.ok; ++i) {
    if (!b_[i][0].is_zero()) {
      rad.fail("B(" + names_[i] + ", E) = " + scalar_str(b_[i][0]));
    } else if (!b_[0][i].is_zero()) {
      rad.fail("B(E, " + names_[i] + ") = " + scalar_str(b_[0][i]));
    }
  }
  out.push_back(rad.result("b-kills-radical", "B(X, E) = 0 for every tangent X"));

  std::vector<FieldAlong> an(n), astar(n);
  for (std::size_t i = 0; i < n; ++i) {
    an[i] = shape_transversal(basis_[i]);
    astar[i] = shape_screen(basis_[i]);
  }

  ItemScan anc;
  for (std::size_t i = 0; i < n && anc.ok; ++i) {
    for (std::size_t j = 1; j < n && anc.ok; ++j) {
      RationalExpr got = pairing(an[i], basis_[j]);
      if (got != c_[i][j]) {
        anc.fail("g(A_N " + names_[i] + ", " + names_[j] + ") = " + scalar_str(got) +
                 " while C = " + scalar_str(c_[i][j]));
      }
    }
  }
  out.push_back(anc.result("shape-transversal-screen-pairing",
                           "g(A_N X, PY) = C(X, PY) on basis pairs"));

  ItemScan asb;
  for (std::size_t i = 0; i < n && asb.ok; ++i) {
    for (std::size_t j = 1; j < n && asb.ok; ++j) {
      RationalExpr got = pairing(astar[i], basis_[j]);
      if (got != b_[i][j]) {
        asb.fail("g(A*_E " + names_[i] + ", " + names_[j] + ") = " + scalar_str(got) +
                 " while B = " + scalar_str(b_[i][j]));
      }
    }
  }
  out.push_back(asb.result("shape-screen-pairing", "g(A*_E X, PY) = B(X, PY) on basis pairs"));

  ItemScan ann;
  for (std::size_t i = 0; i < n && ann.ok; ++i) {
    RationalExpr got = pairing(an[i], frame_.N);
    if (!got.is_zero()) ann.fail("g(A_N " + names_[i] + ", N) = " + scalar_str(got));
  }
  out.push_back(ann.result("shape-transversal-no-normal-part", "g(A_N X, N) = 0"));

  ItemScan asn;
  for (std::size_t i = 0; i < n && asn.ok; ++i) {
    RationalExpr got = pairing(astar[i], frame_.N);
    if (!got.is_zero()) asn.fail("g(A*_E " + names_[i] + ", N) = " + scalar_str(got));
  }
  out.push_back(asn.result("shape-screen-no-normal-part", "g(A*_E X, N) = 0"));

  if (is_zero_field(astar[0])) {
    out.push_back(check_pass("shape-screen-kills-radical", "A*_E E = 0"));
  } else {
    out.push_back(check_fail("shape-screen-kills-radical", "A*_E E = 0",
                             "A*_E E = " + field_str(astar[0])));
  }

  {
    FieldAlong amb = ambient_connection(frame_.E, frame_.E);
    bool ok = true;
    for (std::size_t a = 0; a < amb.ambient.size() && ok; ++a) {
      ok = amb.ambient[a] == -tau_[0] * frame_.E.ambient[a];
    }
    for (std::size_t a = 0; a < amb.ambient.size() && ok; ++a) {
      ok = nabla_[0][0].ambient[a] == -tau_[0] * frame_.E.ambient[a];
    }
    if (ok) {
      out.push_back(check_pass("radical-autoparallel", "nablabar_E E = nabla_E E = -tau(E) E"));
    } else {
      out.push_back(check_fail("radical-autoparallel", "nablabar_E E = nabla_E E = -tau(E) E",
                               "nablabar_E E = " + field_str(amb) +
                                   " with tau(E) = " + scalar_str(tau_[0])));
    }
  }

  Matrix gn(1, std::vector<RationalExpr>(n, chart().zero()));
  for (std::size_t j = 0; j < n; ++j) gn[0][j] = pairing(basis_[j], frame_.N);
  ItemScan met;
  ItemScan smet;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!met.ok && !smet.ok) break;
        RationalExpr lhs = directional_scalar(basis_[i], pairing(basis_[j], basis_[k])) -
                           pairing(nabla_[i][j], basis_[k]) - pairing(basis_[j], nabla_[i][k]);
        RationalExpr rhs = b_[i][j] * gn[0][k] + b_[i][k] * gn[0][j];
        if (met.ok && lhs != rhs) {
          met.fail("(nabla_" + names_[i] + " g)(" + names_[j] + ", " + names_[k] + ") = " +
                   scalar_str(lhs) + " while B-terms give " + scalar_str(rhs));
        }
        if (smet.ok && j > 0 && k > 0 && !lhs.is_zero()) {
          smet.fail("(nabla_" + names_[i] + " g)(" + names_[j] + ", " + names_[k] + ") = " +
                    scalar_str(lhs));
        }
      }
    }
  }
  out.push_back(met.result("non-metricity",
                           "(nabla_X g)(Y, Z) = B(X, Y) g(Z, N) + B(X, Z) g(Y, N)"));
  out.push_back(smet.result("screen-metricity", "(nabla_X g)(Y, Z) = 0 for screen Y, Z"));

  return out;
}

std::vector<CheckResult> InducedGeometry::structure_report() const {
  std::vector<CheckResult> out;
  const std::size_t n = basis_.size();
  const std::size_t r = frame_.xi.size();

  std::vector<FieldAlong> phi(n), phibar(n), an(n);
  std::vector<RationalExpr> u(n, chart().zero());
  for (std::size_t i = 0; i < n; ++i) {
    phi[i] = structure_tangent(basis_[i]);
    phibar[i] = structure_ambient(basis_[i]);
    an[i] = shape_transversal(basis_[i]);
    u[i] = u_form(basis_[i]);
  }
  FieldAlong xibar;
  {
    std::vector<RationalExpr> coeffs(frame_.imm.dim(), chart().zero());
    for (const FieldAlong& x : frame_.xi) {
      for (std::size_t a = 0; a < coeffs.size(); ++a) coeffs[a] += (*x.coeffs)[a];
    }
    xibar = tangent_field(frame_.imm, std::move(coeffs));
  }
  auto eta_bar_on = [&](const FieldAlong& x) {
    RationalExpr v = chart().zero();
    for (std::size_t al = 0; al < r; ++al) {
      v += chart().scalar(Rat(epsilon_[al])) * eta_form(al, x);
    }
    return v;
  };

  ItemScan split;
  for (std::size_t i = 0; i < n && split.ok; ++i) {
    for (std::size_t a = 0; a < phibar[i].ambient.size() && split.ok; ++a) {
      RationalExpr want = phi[i].ambient[a] + u[i] * frame_.N.ambient[a];
      if (phibar[i].ambient[a] != want) {
        split.fail("component " + ambient_names_[a] + " of phibar " + names_[i] +
                   " differs from phi + u N by " + scalar_str(phibar[i].ambient[a] - want));
      }
    }
  }
  out.push_back(split.result("ambient-structure-split", "phibar X = phi X + u(X) N"));

  ItemScan square;
  for (std::size_t i = 0; i < n && square.ok; ++i) {
    FieldAlong pp = structure_tangent(phi[i]);
    for (std::size_t a = 0; a < pp.ambient.size() && square.ok; ++a) {
      RationalExpr want = -basis_[i].ambient[a] + u[i] * frame_.U.ambient[a];
      for (std::size_t al = 0; al < r; ++al) {
        want += eta_form(al, basis_[i]) * frame_.xi[al].ambient[a];
      }
      if (pp.ambient[a] != want) {
        square.fail("phi^2 " + names_[i] + " misses -X + eta^a(X) xi_a + u(X) U at component " +
                    ambient_names_[a] + " by " + scalar_str(pp.ambient[a] - want));
      }
    }
  }
  out.push_back(square.result("phi-square", "phi^2 X = -X + eta^a(X) xi_a + u(X) U"));

  ItemScan kills;
  for (std::size_t al = 0; al < r && kills.ok; ++al) {
    FieldAlong px = structure_tangent(frame_.xi[al]);
    if (!is_zero_field(px)) kills.fail("phi xi_" + std::to_string(al + 1) + " = " + field_str(px));
  }
  if (kills.ok) {
    FieldAlong pu = structure_tangent(frame_.U);
    if (!is_zero_field(pu)) kills.fail("phi U = " + field_str(pu));
  }
  out.push_back(kills.result("phi-kills-structure-fields", "phi xi_a = 0 and phi U = 0"));

  ItemScan dual;
  for (std::size_t al = 0; al < r && dual.ok; ++al) {
    for (std::size_t be = 0; be < r && dual.ok; ++be) {
      RationalExpr got = eta_form(al, frame_.xi[be]);
      RationalExpr want = al == be ? chart().one() : chart().zero();
      if (got != want) {
        dual.fail("eta^" + std::to_string(al + 1) + "(xi_" + std::to_string(be + 1) + ") = " +
                  scalar_str(got));
      }
    }
    if (dual.ok) {
      RationalExpr got = eta_form(al, frame_.U);
      if (!got.is_zero()) dual.fail("eta^" + std::to_string(al + 1) + "(U) = " + scalar_str(got));
    }
  }
  if (dual.ok) {
    for (std::size_t al = 0; al < r && dual.ok; ++al) {
      RationalExpr got = u_form(frame_.xi[al]);
      if (!got.is_zero()) dual.fail("u(xi_" + std::to_string(al + 1) + ") = " + scalar_str(got));
    }
  }
  if (dual.ok) {
    RationalExpr got = u_form(frame_.U);
    if (!got.is_one()) dual.fail("u(U) = " + scalar_str(got));
  }
  out.push_back(dual.result("dual-pairings",
                            "eta^a(xi_b) = delta, eta^a(U) = 0, u(xi_b) = 0, u(U) = 1"));

  ItemScan range;
  for (std::size_t i = 0; i < n && range.ok; ++i) {
    for (std::size_t al = 0; al < r && range.ok; ++al) {
      RationalExpr got = eta_form(al, phi[i]);
      if (!got.is_zero()) {
        range.fail("eta^" + std::to_string(al + 1) + "(phi " + names_[i] + ") = " +
                   scalar_str(got));
      }
    }
    if (range.ok) {
      RationalExpr got = u_form(phi[i]);
      if (!got.is_zero()) range.fail("u(phi " + names_[i] + ") = " + scalar_str(got));
    }
  }
  out.push_back(range.result("one-forms-kill-phi-range", "eta^a(phi X) = 0 and u(phi X) = 0"));

  ItemScan cov;
  for (std::size_t i = 0; i < n && cov.ok; ++i) {
    for (std::size_t j = 0; j < n && cov.ok; ++j) {
      FieldAlong dphi = induced_connection(basis_[i], phi[j]);
      FieldAlong pnab = structure_tangent(nabla_[i][j]);
      RationalExpr gphi = pairing(phibar[i], phibar[j]);
      RationalExpr etb = eta_bar_on(basis_[j]);
      FieldAlong pb2 = structure_ambient(phibar[i]);
      for (std::size_t a = 0; a < dphi.ambient.size() && cov.ok; ++a) {
        RationalExpr lhs = dphi.ambient[a] - pnab.ambient[a];
        RationalExpr rhs = u[j] * an[i].ambient[a] - b_[i][j] * frame_.U.ambient[a] +
                           gphi * xibar.ambient[a] + etb * pb2.ambient[a];
        if (lhs != rhs) {
          cov.fail("(nabla_" + names_[i] + " phi) " + names_[j] + " misses the structure terms at " +
                   ambient_names_[a] + " by " + scalar_str(lhs - rhs));
        }
      }
    }
  }
  out.push_back(cov.result(
      "phi-covariant",
      "(nabla_X phi)Y = u(Y) A_N X - B(X, Y) U + g(phibar X, phibar Y) xibar + etabar(Y) phibar^2 X"));

  ItemScan ucov;
  for (std::size_t i = 0; i < n && ucov.ok; ++i) {
    for (std::size_t j = 0; j < n && ucov.ok; ++j) {
      RationalExpr lhs = directional_scalar(basis_[i], u[j]) - u_form(nabla_[i][j]);
      RationalExpr rhs = -second_fundamental(basis_[i], phi[j]) - u[j] * tau_[i];
      if (lhs != rhs) {
        ucov.fail("(nabla_" + names_[i] + " u)(" + names_[j] + ") = " + scalar_str(lhs) +
                  " while -B(X, phi Y) - u(Y) tau(X) = " + scalar_str(rhs));
      }
    }
  }
  out.push_back(ucov.result("u-covariant", "(nabla_X u)Y = -B(X, phi Y) - u(Y) tau(X)"));

  return out;
}

std::vector<CheckResult> InducedGeometry::totally_geodesic_report() const {
  std::vector<CheckResult> out;
  const std::size_t n = basis_.size();
  const std::size_t iu = n - 2;

  bool geodesic = true;
  std::string bw;
  for (std::size_t i = 0; i < n && geodesic; ++i) {
    for (std::size_t j = 0; j < n && geodesic; ++j) {
      if (!b_[i][j].is_zero()) {
        geodesic = false;
        bw = "B(" + names_[i] + ", " + names_[j] + ") = " + scalar_str(b_[i][j]);
      }
    }
  }
  out.push_back(check_pass("totally-geodesic-verdict",
                           geodesic ? "B = 0 identically on the tangent basis"
                                    : "B does not vanish: " + bw));

  std::vector<FieldAlong> phi(n), phibar(n), an(n);
  for (std::size_t i = 0; i < n; ++i) {
    phi[i] = structure_tangent(basis_[i]);
    phibar[i] = structure_ambient(basis_[i]);
    an[i] = shape_transversal(basis_[i]);
  }
  FieldAlong xibar;
  {
    std::vector<RationalExpr> coeffs(frame_.imm.dim(), chart().zero());
    for (const FieldAlong& x : frame_.xi) {
      for (std::size_t a = 0; a < coeffs.size(); ++a) coeffs[a] += (*x.coeffs)[a];
    }
    xibar = tangent_field(frame_.imm, std::move(coeffs));
  }
  auto eta_bar_on = [&](const FieldAlong& x) {
    RationalExpr v = chart().zero();
    for (std::size_t al = 0; al < frame_.xi.size(); ++al) {
      v += chart().scalar(Rat(epsilon_[al])) * eta_form(al, x);
    }
    return v;
  };

  bool conditions = true;
  std::string cw;
  for (std::size_t i = 0; i < n && conditions; ++i) {
    for (std::size_t j = 0; j < n && conditions; ++j) {
      if (j == iu) continue;  // restrict Y to the degenerate distribution D
      FieldAlong dphi = induced_connection(basis_[i], phi[j]);
      FieldAlong pnab = structure_tangent(nabla_[i][j]);
      RationalExpr gphi = pairing(phibar[i], phibar[j]);
      RationalExpr etb = eta_bar_on(basis_[j]);
      FieldAlong pb2 = structure_ambient(phibar[i]);
      for (std::size_t a = 0; a < dphi.ambient.size() && conditions; ++a) {
        RationalExpr lhs = dphi.ambient[a] - pnab.ambient[a];
        RationalExpr rhs = gphi * xibar.ambient[a] + etb * pb2.ambient[a];
        if (lhs != rhs) {
          conditions = false;
          cw = "(nabla_" + names_[i] + " phi) " + names_[j] +
               " keeps shape terms: difference at " + ambient_names_[a] + " is " +
               scalar_str(lhs - rhs);
        }
      }
    }
  }
  for (std::size_t i = 0; i < n && conditions; ++i) {
    FieldAlong pnu = structure_tangent(nabla_[i][iu]);
    RationalExpr gxu = pairing(basis_[i], frame_.U);
    for (std::size_t a = 0; a < pnu.ambient.size() && conditions; ++a) {
      RationalExpr want = -pnu.ambient[a] - gxu * xibar.ambient[a];
      if (an[i].ambient[a] != want) {
        conditions = false;
        cw = "A_N " + names_[i] + " != -phi(nabla_X U) - g(X, U) xibar at " + ambient_names_[a] +
             ": difference " + scalar_str(an[i].ambient[a] - want);
      }
    }
  }

  if (geodesic == conditions) {
    out.push_back(check_pass(
        "totally-geodesic-criteria",
        std::string("the covariant criteria agree with the direct verdict: ") +
            (geodesic ? "both hold" : "both fail")));
  } else {
    out.push_back(check_fail("totally-geodesic-criteria",
                             "B = 0 iff (nabla_X phi)Y keeps only structure terms on D and "
                             "A_N X = -phi(nabla_X U) - g(X, U) xibar",
                             geodesic ? "B = 0 but the criteria fail: " + cw
                                      : "criteria hold but " + bw));
  }
  return out;
}

Proportionality InducedGeometry::umbilical_factor() const {
  const std::size_t n = basis_.size();
  Matrix g(n, std::vector<RationalExpr>(n, chart().zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g[i][j] = pairing(basis_[i], basis_[j]);
  }
  RationalExpr rho = chart().zero();
  bool found = false;
  for (std::size_t i = 0; i < n && !found; ++i) {
    for (std::size_t j = 0; j < n && !found; ++j) {
      if (!g[i][j].is_zero()) {
        rho = b_[i][j] / g[i][j];
        found = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (b_[i][j] != rho * g[i][j]) {
        return {std::nullopt, "B(" + names_[i] + ", " + names_[j] + ") = " + scalar_str(b_[i][j]) +
                                  " while g(" + names_[i] + ", " + names_[j] + ") = " +
                                  scalar_str(g[i][j])};
      }
    }
  }
  return {rho, ""};
}

Proportionality InducedGeometry::screen_umbilical_factor() const {
  const std::size_t n = basis_.size();
  Matrix g(n, std::vector<RationalExpr>(n, chart().zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) g[i][j] = pairing(basis_[i], basis_[j]);
  }
  RationalExpr lambda = chart().zero();
  bool found = false;
  for (std::size_t i = 0; i < n && !found; ++i) {
    for (std::size_t j = 1; j < n && !found; ++j) {
      if (!g[i][j].is_zero()) {
        lambda = c_[i][j] / g[i][j];
        found = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      if (c_[i][j] != lambda * g[i][j]) {
        return {std::nullopt, "C(" + names_[i] + ", " + names_[j] + ") = " + scalar_str(c_[i][j]) +
                                  " while g(" + names_[i] + ", " + names_[j] + ") = " +
                                  scalar_str(g[i][j])};
      }
    }
  }
  return {lambda, ""};
}

std::vector<CheckResult> InducedGeometry::umbilicity_report() const {
  std::vector<CheckResult> out;
  Proportionality rho = umbilical_factor();
  out.push_back(check_pass("umbilical-factor",
                           rho.factor ? "B = rho g with rho = " + scalar_str(*rho.factor)
                                      : "no umbilical factor: " + rho.witness));
  Proportionality lam = screen_umbilical_factor();
  out.push_back(check_pass("screen-umbilical-factor",
                           lam.factor ? "C = lambda g with lambda = " + scalar_str(*lam.factor)
                                      : "no screen umbilical factor: " + lam.witness));
  return out;
}

std::vector<CheckResult> InducedGeometry::d0_report() const {
  std::vector<CheckResult> out;
  const std::size_t n = basis_.size();
  const std::size_t k = frame_.d0.size();
  std::vector<std::size_t> d0i(k);
  for (std::size_t i = 0; i < k; ++i) d0i[i] = i + 1;
  const std::size_t iu = n - 2;
  const std::size_t iv = n - 1;

  std::vector<FieldAlong> pb(k);
  for (std::size_t i = 0; i < k; ++i) {
    pb[i] = structure_ambient(basis_[d0i[i]]);
    if (!pb[i].tangent()) throw MathError("phibar left the degenerate distribution non-tangent");
  }

  ItemScan symc;
  for (std::size_t i = 0; i < k && symc.ok; ++i) {
    for (std::size_t j = i + 1; j < k && symc.ok; ++j) {
      if (c_[d0i[i]][d0i[j]] != c_[d0i[j]][d0i[i]]) {
        symc.fail("C(" + names_[d0i[i]] + ", " + names_[d0i[j]] + ") - C(" + names_[d0i[j]] +
                  ", " + names_[d0i[i]] + ") = " +
                  scalar_str(c_[d0i[i]][d0i[j]] - c_[d0i[j]][d0i[i]]));
      }
    }
  }
  out.push_back(symc.result("d0-screen-form-symmetric", "C(X, Y) = C(Y, X) on D0"));

  ItemScan psymc;
  for (std::size_t i = 0; i < k && psymc.ok; ++i) {
    for (std::size_t j = 0; j < k && psymc.ok; ++j) {
      RationalExpr lhs = screen_form(basis_[d0i[i]], pb[j]);
      RationalExpr rhs = screen_form(pb[i], basis_[d0i[j]]);
      if (lhs != rhs) {
        psymc.fail("C(" + names_[d0i[i]] + ", phibar " + names_[d0i[j]] + ") = " +
                   scalar_str(lhs) + " while C(phibar " + names_[d0i[i]] + ", " + names_[d0i[j]] +
                   ") = " + scalar_str(rhs));
      }
    }
  }
  out.push_back(
      psymc.result("d0-screen-form-phi-symmetric", "C(X, phibar Y) = C(phibar X, Y) on D0"));

  ItemScan psymb;
  for (std::size_t i = 0; i < k && psymb.ok; ++i) {
    for (std::size_t j = 0; j < k && psymb.ok; ++j) {
      RationalExpr lhs = second_fundamental(basis_[d0i[i]], pb[j]);
      RationalExpr rhs = second_fundamental(pb[i], basis_[d0i[j]]);
      if (lhs != rhs) {
        psymb.fail("B(" + names_[d0i[i]] + ", phibar " + names_[d0i[j]] + ") = " +
                   scalar_str(lhs) + " while B(phibar " + names_[d0i[i]] + ", " + names_[d0i[j]] +
                   ") = " + scalar_str(rhs));
      }
    }
  }
  out.push_back(
      psymb.result("d0-second-form-phi-symmetric", "B(X, phibar Y) = B(phibar X, Y) on D0"));

  bool conditions = out[0].passed && out[1].passed && out[2].passed;

  bool involutive = true;
  std::string bw;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k && involutive; ++j) {
      std::vector<RationalExpr> c = resolve_in_basis(lie(basis_[d0i[i]], basis_[d0i[j]]));
      for (std::size_t p : {std::size_t{0}, iu, iv}) {
        if (!c[p].is_zero()) {
          involutive = false;
          bw = "[" + names_[d0i[i]] + ", " + names_[d0i[j]] + "] has " + names_[p] +
               "-component " + scalar_str(c[p]);
          break;
        }
      }
    }
  }
  out.push_back(check_pass("d0-involutive-verdict",
                           involutive ? "all D0 brackets stay in D0" : "D0 is not involutive: " + bw));

  if (conditions == involutive) {
    out.push_back(check_pass("d0-criteria-oracle-agreement",
                             std::string("symmetry criteria match the bracket oracle: ") +
                                 (involutive ? "both hold" : "both fail")));
  } else {
    out.push_back(check_fail("d0-criteria-oracle-agreement",
                             "C symmetric, C/B phibar-symmetric on D0 iff D0 involutive",
                             conditions ? "criteria hold but " + bw
                                        : "brackets close but a symmetry criterion fails"));
  }

  ItemScan expansion;
  for (std::size_t i = 0; i < k && expansion.ok; ++i) {
    for (std::size_t j = 0; j < k && expansion.ok; ++j) {
      FieldAlong h0 = screen_valued_form(basis_[d0i[i]], basis_[d0i[j]]);
      RationalExpr f1 = screen_form(basis_[d0i[i]], pb[j]);
      RationalExpr f2 = second_fundamental(basis_[d0i[i]], pb[j]);
      RationalExpr f3 = c_[d0i[i]][d0i[j]];
      for (std::size_t a = 0; a < h0.ambient.size() && expansion.ok; ++a) {
        RationalExpr want = f1 * frame_.V.ambient[a] + f2 * frame_.U.ambient[a] +
                            f3 * frame_.E.ambient[a];
        if (h0.ambient[a] != want) {
          expansion.fail("h0(" + names_[d0i[i]] + ", " + names_[d0i[j]] +
                         ") misses the expansion at " + ambient_names_[a] + " by " +
                         scalar_str(h0.ambient[a] - want));
        }
      }
    }
  }
  out.push_back(expansion.result(
      "d0-frame-second-form-expansion",
      "h0(X, Y) = -C(X, phibar Y) phibar E - B(X, phibar Y) phibar N + C(X, Y) E on D0"));

  ItemScan lift;
  for (std::size_t i = 0; i < k && lift.ok; ++i) {
    for (std::size_t j = 0; j < k && lift.ok; ++j) {
      FieldAlong h0 = screen_valued_form(basis_[d0i[i]], basis_[d0i[j]]);
      RationalExpr f1 = -screen_form(basis_[d0i[i]], pb[j]);
      RationalExpr f2 = -second_fundamental(basis_[d0i[i]], pb[j]);
      RationalExpr f3 = c_[d0i[i]][d0i[j]];
      RationalExpr f4 = b_[d0i[i]][d0i[j]];
      for (std::size_t a = 0; a < h0.ambient.size() && lift.ok; ++a) {
        RationalExpr got = h0.ambient[a] + f4 * frame_.N.ambient[a];
        RationalExpr want = f1 * frame_.phiE.ambient[a] + f2 * frame_.phiN.ambient[a] +
                            f3 * frame_.E.ambient[a] + f4 * frame_.N.ambient[a];
        if (got != want) {
          lift.fail("htilde(" + names_[d0i[i]] + ", " + names_[d0i[j]] +
                    ") misses the F-frame expansion at " + ambient_names_[a] + " by " +
                    scalar_str(got - want));
        }
      }
    }
  }
  out.push_back(lift.result(
      "d0-transversal-extension",
      "htilde = F1 phibar E + F2 phibar N + F3 E + F4 N with F1 = -C(X, phibar Y), "
      "F2 = -B(X, phibar Y), F3 = C(X, Y), F4 = B(X, Y)"));

  Matrix gram(k, std::vector<RationalExpr>(k, chart().zero()));
  bool adapted = true;
  std::string gw;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      gram[i][j] = pairing(basis_[d0i[i]], basis_[d0i[j]]);
      if (i != j && !gram[i][j].is_zero()) {
        adapted = false;
        gw = "g(" + names_[d0i[i]] + ", " + names_[d0i[j]] + ") = " + scalar_str(gram[i][j]);
      }
      if (i == j && !gram[i][j].is_constant()) {
        adapted = false;
        gw = "g(" + names_[d0i[i]] + ", " + names_[d0i[j]] + ") = " + scalar_str(gram[i][j]) +
             " is not constant";
      }
      if (i == j && gram[i][j].is_zero()) {
        adapted = false;
        gw = "g(" + names_[d0i[i]] + ", " + names_[d0i[i]] + ") = 0";
      }
    }
  }
  if (adapted) {
    out.push_back(check_pass("d0-adapted-gram",
                             "the D0 basis is g-orthogonal with constant nonzero norms"));
    std::vector<FieldAlong> diag(k);
    for (std::size_t i = 0; i < k; ++i) {
      diag[i] = screen_valued_form(basis_[d0i[i]], basis_[d0i[i]]);
    }
    const std::size_t m = frame_.imm.ambient_dim();
    std::vector<RationalExpr> tr0(m, chart().zero());
    std::vector<RationalExpr> trb(m, chart().zero());
    RationalExpr btrace = chart().zero();
    for (std::size_t i = 0; i < k; ++i) {
      RationalExpr w = chart().one() / gram[i][i];
      for (std::size_t a = 0; a < m; ++a) tr0[a] += w * diag[i].ambient[a];
      btrace += w * b_[d0i[i]][d0i[i]];
    }
    for (std::size_t a = 0; a < m; ++a) {
      trb[a] = tr0[a] + btrace * frame_.N.ambient[a];
    }
    std::string t0s = field_str(FieldAlong{tr0, std::nullopt});
    std::string tbs = field_str(FieldAlong{trb, std::nullopt});
    out.push_back(check_pass("d0-trace-values",
                             "trace(h0) = " + t0s + "; trace(htilde) = " + tbs));
    std::vector<RationalExpr> mu(m, chart().zero());
    RationalExpr inv_rank = chart().one() / chart().scalar(Rat(static_cast<long>(k)));
    for (std::size_t a = 0; a < m; ++a) mu[a] = inv_rank * tr0[a];
    out.push_back(check_pass("d0-mean-curvature",
                             "mu = trace(B^D0)/rank(D0) = " +
                                 field_str(FieldAlong{mu, std::nullopt})));
  } else {
    out.push_back(check_fail("d0-adapted-gram",
                             "the D0 basis is g-orthogonal with constant nonzero norms", gw));
  }

  if (involutive) {
    ItemScan flipb;
    for (std::size_t i = 0; i < k && flipb.ok; ++i) {
      for (std::size_t j = 0; j < k && flipb.ok; ++j) {
        RationalExpr lhs = second_fundamental(pb[i], pb[j]);
        if (lhs != -b_[d0i[i]][d0i[j]]) {
          flipb.fail("B(phibar " + names_[d0i[i]] + ", phibar " + names_[d0i[j]] + ") = " +
                     scalar_str(lhs) + " while -B gives " + scalar_str(-b_[d0i[i]][d0i[j]]));
        }
        RationalExpr lhc = screen_form(pb[i], pb[j]);
        if (flipb.ok && lhc != -c_[d0i[i]][d0i[j]]) {
          flipb.fail("C(phibar " + names_[d0i[i]] + ", phibar " + names_[d0i[j]] + ") = " +
                     scalar_str(lhc) + " while -C gives " + scalar_str(-c_[d0i[i]][d0i[j]]));
        }
      }
    }
    out.push_back(flipb.result("d0-integrable-phi-flip",
                               "B(phibar X, phibar Y) = -B(X, Y) and C(phibar X, phibar Y) = "
                               "-C(X, Y) on involutive D0"));
  } else {
    out.push_back(check_pass("d0-integrable-phi-flip", "not applicable: D0 is not involutive"));
  }

  const std::size_t r = frame_.xi.size();
  if (involutive) {
    auto project_d0 = [&](const FieldAlong& w) {
      std::vector<RationalExpr> c = resolve_in_basis(w);
      std::vector<RationalExpr> coeffs(frame_.imm.dim(), chart().zero());
      for (std::size_t p : d0i) {
        for (std::size_t a = 0; a < coeffs.size(); ++a) coeffs[a] += c[p] * (*basis_[p].coeffs)[a];
      }
      return tangent_field(frame_.imm, std::move(coeffs));
    };
    ItemScan rsq;
    for (std::size_t i = 0; i < k && rsq.ok; ++i) {
      FieldAlong pp = structure_ambient(pb[i]);
      for (std::size_t a = 0; a < pp.ambient.size() && rsq.ok; ++a) {
        RationalExpr want = -basis_[d0i[i]].ambient[a];
        for (std::size_t al = 0; al < r; ++al) {
          want += eta_form(al, basis_[d0i[i]]) * frame_.xi[al].ambient[a];
        }
        if (pp.ambient[a] != want) {
          rsq.fail("phibar^2 " + names_[d0i[i]] + " misses -X + eta^a(X) xi_a at " +
                   ambient_names_[a] + " by " + scalar_str(pp.ambient[a] - want));
        }
      }
    }
    out.push_back(rsq.result("d0-restricted-phi-square",
                             "phibar^2 X = -X + eta^a(X) xi_a on D0"));

    ItemScan rcomp;
    for (std::size_t i = 0; i < k && rcomp.ok; ++i) {
      for (std::size_t j = 0; j < k && rcomp.ok; ++j) {
        RationalExpr lhs = pairing(pb[i], pb[j]);
        RationalExpr rhs = gram[i][j];
        for (std::size_t al = 0; al < r; ++al) {
          rhs -= chart().scalar(Rat(epsilon_[al])) * eta_form(al, basis_[d0i[i]]) *
                 eta_form(al, basis_[d0i[j]]);
        }
        if (lhs != rhs) {
          rcomp.fail("g(phibar " + names_[d0i[i]] + ", phibar " + names_[d0i[j]] + ") = " +
                     scalar_str(lhs) + " while the compatibility value is " + scalar_str(rhs));
        }
      }
    }
    out.push_back(rcomp.result("d0-restricted-compatibility",
                               "g(phibar X, phibar Y) = g(X, Y) - eps_a eta^a(X) eta^a(Y) on D0"));

    FieldAlong xibar;
    {
      std::vector<RationalExpr> coeffs(frame_.imm.dim(), chart().zero());
      for (const FieldAlong& x : frame_.xi) {
        for (std::size_t a = 0; a < coeffs.size(); ++a) coeffs[a] += (*x.coeffs)[a];
      }
      xibar = tangent_field(frame_.imm, std::move(coeffs));
    }
    ItemScan rder;
    for (std::size_t i = 0; i < k && rder.ok; ++i) {
      for (std::size_t j = 0; j < k && rder.ok; ++j) {
        FieldAlong term1 = project_d0(induced_connection(basis_[d0i[i]], pb[j]));
        FieldAlong term2 = structure_ambient(project_d0(nabla_[d0i[i]][d0i[j]]));
        RationalExpr gphi = pairing(pb[i], pb[j]);
        RationalExpr etb = chart().zero();
        for (std::size_t al = 0; al < r; ++al) {
          etb += chart().scalar(Rat(epsilon_[al])) * eta_form(al, basis_[d0i[j]]);
        }
        FieldAlong pb2 = structure_ambient(pb[i]);
        for (std::size_t a = 0; a < term1.ambient.size() && rder.ok; ++a) {
          RationalExpr lhs = term1.ambient[a] - term2.ambient[a];
          RationalExpr rhs = gphi * xibar.ambient[a] + etb * pb2.ambient[a];
          if (lhs != rhs) {
            rder.fail("(nabla0_" + names_[d0i[i]] + " phibar) " + names_[d0i[j]] +
                      " misses the restricted identity at " + ambient_names_[a] + " by " +
                      scalar_str(lhs - rhs));
          }
        }
      }
    }
    out.push_back(rder.result(
        "d0-restricted-phi-derivative",
        "(nabla0_X phibar)Y = g(phibar X, phibar Y) xibar + etabar(Y) phibar^2 X on D0"));
  } else {
    out.push_back(check_pass("d0-restricted-phi-square", "not applicable: D0 is not involutive"));
    out.push_back(
        check_pass("d0-restricted-compatibility", "not applicable: D0 is not involutive"));
    out.push_back(
        check_pass("d0-restricted-phi-derivative", "not applicable: D0 is not involutive"));
  }

  ItemScan scal;
  for (std::size_t i = 0; i < k && scal.ok; ++i) {
    for (std::size_t j = 0; j < k && scal.ok; ++j) {
      FieldAlong t1 = ambient_connection(basis_[d0i[i]], pb[j]);
      FieldAlong t2 = structure_ambient(ambient_connection(basis_[d0i[i]], basis_[d0i[j]]));
      FieldAlong diff{field_difference(chart(), t1, t2), std::nullopt};
      RationalExpr se = pairing(diff, frame_.E);
      RationalExpr sn = pairing(diff, frame_.N);
      if (!se.is_zero()) {
        scal.fail("g((nablabar_" + names_[d0i[i]] + " phibar) " + names_[d0i[j]] + ", E) = " +
                  scalar_str(se));
      } else if (!sn.is_zero()) {
        scal.fail("g((nablabar_" + names_[d0i[i]] + " phibar) " + names_[d0i[j]] + ", N) = " +
                  scalar_str(sn));
      }
    }
  }
  out.push_back(scal.result("d0-phi-derivative-scalars",
                            "g((nablabar_X phibar)Y, E) = g((nablabar_X phibar)Y, N) = 0 on D0"));

  return out;
}

std::vector<CheckResult> InducedGeometry::d_report() const {
  std::vector<CheckResult> out;
  const std::size_t n = basis_.size();
  const std::size_t k = frame_.d0.size();
  std::vector<std::size_t> d0i(k);
  for (std::size_t i = 0; i < k; ++i) d0i[i] = i + 1;
  const std::size_t iu = n - 2;
  const std::size_t iv = n - 1;
  std::vector<std::size_t> di = d0i;
  di.push_back(iv);
  di.push_back(0);

  std::vector<FieldAlong> pb(k);
  for (std::size_t i = 0; i < k; ++i) pb[i] = structure_ambient(basis_[d0i[i]]);

  ItemScan psym;
  for (std::size_t i = 0; i < k && psym.ok; ++i) {
    for (std::size_t j = 0; j < k && psym.ok; ++j) {
      RationalExpr lhs = second_fundamental(basis_[d0i[i]], pb[j]);
      RationalExpr rhs = second_fundamental(pb[i], basis_[d0i[j]]);
      if (lhs != rhs) {
        psym.fail("B(" + names_[d0i[i]] + ", phibar " + names_[d0i[j]] + ") = " + scalar_str(lhs) +
                  " while B(phibar " + names_[d0i[i]] + ", " + names_[d0i[j]] + ") = " +
                  scalar_str(rhs));
      }
    }
  }
  out.push_back(psym.result("d-second-form-phi-symmetric",
                            "B(X, phibar Y) = B(phibar X, Y) on D0"));

  ItemScan bv;
  for (std::size_t i = 0; i < k && bv.ok; ++i) {
    RationalExpr got = b_[d0i[i]][iv];
    if (!got.is_zero()) bv.fail("B(" + names_[d0i[i]] + ", V) = " + scalar_str(got));
  }
  out.push_back(bv.result("d-second-form-kills-v", "B(X, V) = 0 for X in D0"));

  {
    RationalExpr got = b_[iv][iv];
    if (got.is_zero()) {
      out.push_back(check_pass("d-v-geodesic", "B(V, V) = 0"));
    } else {
      out.push_back(check_fail("d-v-geodesic", "B(V, V) = 0", "B(V, V) = " + scalar_str(got)));
    }
  }

  bool conditions = out[0].passed && out[1].passed && out[2].passed;

  bool involutive = true;
  std::string bw;
  for (std::size_t i = 0; i < di.size() && involutive; ++i) {
    for (std::size_t j = i + 1; j < di.size() && involutive; ++j) {
      std::vector<RationalExpr> c = resolve_in_basis(lie(basis_[di[i]], basis_[di[j]]));
      if (!c[iu].is_zero()) {
        involutive = false;
        bw = "[" + names_[di[i]] + ", " + names_[di[j]] + "] has U-component " + scalar_str(c[iu]);
      }
    }
  }
  out.push_back(check_pass("d-involutive-verdict",
                           involutive ? "all D brackets stay in D" : "D is not involutive: " + bw));

  if (conditions == involutive) {
    out.push_back(check_pass("d-criteria-oracle-agreement",
                             std::string("the B-conditions match the bracket oracle: ") +
                                 (involutive ? "both hold" : "both fail")));
  } else {
    out.push_back(check_fail("d-criteria-oracle-agreement",
                             "B phibar-symmetric on D0, B(X, V) = 0, B(V, V) = 0 iff D involutive",
                             conditions ? "conditions hold but " + bw
                                        : "brackets close but a B-condition fails"));
  }

  {
    std::string vals;
    for (std::size_t i = 0; i < k; ++i) {
      if (!vals.empty()) vals += "; ";
      vals += "B(" + names_[d0i[i]] + ", U) = " + scalar_str(b_[d0i[i]][iu]);
    }
    out.push_back(check_pass("d-companion-transversal-values",
                             "second fundamental form against U = -phibar N: " + vals));
  }

  ItemScan ltr;
  for (std::size_t i = 0; i < n && ltr.ok; ++i) {
    for (std::size_t j = 0; j < n && ltr.ok; ++j) {
      FieldAlong t1 = ambient_connection(basis_[i], structure_ambient(basis_[j]));
      FieldAlong t2 = structure_ambient(ambient_connection(basis_[i], basis_[j]));
      FieldAlong diff{field_difference(chart(), t1, t2), std::nullopt};
      RationalExpr se = pairing(diff, frame_.E);
      if (!se.is_zero()) {
        ltr.fail("g((nablabar_" + names_[i] + " phibar) " + names_[j] + ", E) = " +
                 scalar_str(se));
      }
    }
  }
  out.push_back(ltr.result("d-ltr-scalar",
                           "g((nablabar_X phibar)Y, E) = 0 for all tangent X, Y"));

  bool geodesic = true;
  for (std::size_t i = 0; i < n && geodesic; ++i) {
    for (std::size_t j = 0; j < n && geodesic; ++j) geodesic = b_[i][j].is_zero();
  }
  if (geodesic) {
    ItemScan par;
    for (std::size_t i = 0; i < n && par.ok; ++i) {
      for (std::size_t w : di) {
        RationalExpr got = pairing(nabla_[i][w], frame_.phiE);
        if (!got.is_zero()) {
          par.fail("g(nabla_" + names_[i] + " " + names_[w] + ", phibar E) = " + scalar_str(got));
          break;
        }
      }
    }
    out.push_back(par.result("d-parallel-when-geodesic",
                             "g(nabla_X W, phibar E) = 0 for W in D when B = 0"));
  } else {
    out.push_back(check_pass("d-parallel-when-geodesic", "not applicable: B does not vanish"));
  }

  return out;
}

std::vector<CheckResult> InducedGeometry::curvature_report(const TensorField& ambient_r04) const {
  if (ambient_r04.chart() != frame_.imm.x_chart || ambient_r04.contravariant_rank() != 0 ||
      ambient_r04.covariant_rank() != 4) {
    throw MathError("curvature relations need the ambient (0,4) curvature on the immersion chart");
  }
  std::vector<CheckResult> out;
  const std::size_t n = basis_.size();
  const std::size_t m = frame_.imm.ambient_dim();

  std::vector<std::vector<std::vector<std::vector<RationalExpr>>>> rf(
      m, std::vector<std::vector<std::vector<RationalExpr>>>(
             m, std::vector<std::vector<RationalExpr>>(
                    m, std::vector<RationalExpr>(m, chart().zero()))));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t d = 0; d < m; ++d) {
          rf[a][b][c][d] = pullback_scalar(frame_.imm, ambient_r04.at({a, b, c, d}));
        }
      }
    }
  }

  // P[i][j][c][d] = rf[a][b][c][d] X_i^a X_j^b, contracted once per pair.
  std::vector<std::vector<Matrix>> pair_part(n, std::vector<Matrix>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix p(m, std::vector<RationalExpr>(m, chart().zero()));
      for (std::size_t a = 0; a < m; ++a) {
        if (basis_[i].ambient[a].is_zero()) continue;
        for (std::size_t b = 0; b < m; ++b) {
          if (basis_[j].ambient[b].is_zero()) continue;
          RationalExpr w = basis_[i].ambient[a] * basis_[j].ambient[b];
          for (std::size_t c = 0; c < m; ++c) {
            for (std::size_t d = 0; d < m; ++d) {
              if (rf[a][b][c][d].is_zero()) continue;
              p[c][d] += w * rf[a][b][c][d];
            }
          }
        }
      }
      pair_part[i][j] = std::move(p);
    }
  }
  auto ambient_r = [&](std::size_t i, std::size_t j, const FieldAlong& z, const FieldAlong& w) {
    RationalExpr v = chart().zero();
    for (std::size_t c = 0; c < m; ++c) {
      if (z.ambient[c].is_zero()) continue;
      for (std::size_t d = 0; d < m; ++d) {
        if (w.ambient[d].is_zero() || pair_part[i][j][c][d].is_zero()) continue;
        v += pair_part[i][j][c][d] * z.ambient[c] * w.ambient[d];
      }
    }
    return v;
  };

  ItemScan radical;
  for (std::size_t i = 0; i < n && radical.ok; ++i) {
    for (std::size_t j = 0; j < n && radical.ok; ++j) {
      for (std::size_t kk = 0; kk < n && radical.ok; ++kk) {
        RationalExpr lhs = ambient_r(i, j, basis_[kk], frame_.E);
        RationalExpr dxb = directional_scalar(basis_[i], b_[j][kk]) -
                           second_fundamental(nabla_[i][j], basis_[kk]) -
                           second_fundamental(basis_[j], nabla_[i][kk]);
        RationalExpr dyb = directional_scalar(basis_[j], b_[i][kk]) -
                           second_fundamental(nabla_[j][i], basis_[kk]) -
                           second_fundamental(basis_[i], nabla_[j][kk]);
        RationalExpr rhs = -(dxb - dyb + tau_[i] * b_[j][kk] - tau_[j] * b_[i][kk]);
        if (lhs != rhs) {
          radical.fail("triple (" + names_[i] + ", " + names_[j] + ", " + names_[kk] +
                       "): Rbar(X, Y, Z, E) = " + scalar_str(lhs) + " while the B-derivative side is " +
                       scalar_str(rhs));
        }
      }
    }
  }
  out.push_back(radical.result(
      "curvature-radical-component",
      "Rbar(X, Y, Z, E) = -{(nabla_X B)(Y, Z) - (nabla_Y B)(X, Z) + tau(X) B(Y, Z) - tau(Y) B(X, Z)}"));

  std::vector<std::vector<FieldAlong>> brackets(n, std::vector<FieldAlong>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) brackets[i][j] = lie(basis_[i], basis_[j]);
  }

  ItemScan transversal;
  for (std::size_t i = 0; i < n && transversal.ok; ++i) {
    for (std::size_t j = 0; j < n && transversal.ok; ++j) {
      for (std::size_t kk = 0; kk < n && transversal.ok; ++kk) {
        RationalExpr lhs = ambient_r(i, j, basis_[kk], frame_.N);
        FieldAlong t1 = induced_connection(basis_[i], nabla_[j][kk]);
        FieldAlong t2 = induced_connection(basis_[j], nabla_[i][kk]);
        FieldAlong t3 = induced_connection(brackets[i][j], basis_[kk]);
        std::vector<RationalExpr> rop(m, chart().zero());
        for (std::size_t a = 0; a < m; ++a) {
          rop[a] = t1.ambient[a] - t2.ambient[a] - t3.ambient[a];
        }
        RationalExpr rhs = -pairing(FieldAlong{rop, std::nullopt}, frame_.N);
        if (lhs != rhs) {
          transversal.fail("triple (" + names_[i] + ", " + names_[j] + ", " + names_[kk] +
                           "): Rbar(X, Y, Z, N) = " + scalar_str(lhs) +
                           " while the induced curvature gives " + scalar_str(rhs));
        }
      }
    }
  }
  out.push_back(transversal.result("curvature-transversal-component",
                                   "Rbar(X, Y, Z, N) = R(X, Y, Z, N) for the induced connection"));

  return out;
}

}  // namespace lightframe

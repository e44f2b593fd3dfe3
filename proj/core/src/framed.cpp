#include "lightframe/framed.hpp"

#include <string>

#include "lightframe/calculus.hpp"
#include "lightframe/connection.hpp"
#include "lightframe/error.hpp"

namespace lightframe {

namespace {

std::string tag(const std::string& base, std::size_t a) {
  return base + "[" + std::to_string(a + 1) + "]";
}

// phi o phi as a (1,1) field.
TensorField phi_square(const TensorField& phi) {
  const Chart& chart = phi.chart();
  const std::size_t n = chart.dim();
  TensorField sq(chart, 1, 1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      RationalExpr sum = chart.zero();
      for (std::size_t mm = 0; mm < n; ++mm) {
        if (phi(a, mm).is_zero() || phi(mm, b).is_zero()) continue;
        sum += phi(a, mm) * phi(mm, b);
      }
      sq(a, b) = sum;
    }
  }
  return sq;
}

// g(phi e_i, phi e_j) as a (0,2) field.
TensorField phi_pullback_metric(const TensorField& g, const TensorField& phi) {
  const Chart& chart = g.chart();
  const std::size_t n = chart.dim();
  TensorField out(chart, 0, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      RationalExpr sum = chart.zero();
      for (std::size_t p = 0; p < n; ++p) {
        if (phi(p, i).is_zero()) continue;
        for (std::size_t q = 0; q < n; ++q) {
          if (phi(q, j).is_zero() || g(p, q).is_zero()) continue;
          sum += phi(p, i) * phi(q, j) * g(p, q);
        }
      }
      out(i, j) = sum;
      out(j, i) = out(i, j);
    }
  }
  return out;
}

}  // namespace

int GffStructure::epsilon_sum() const {
  int sum = 0;
  for (int e : epsilon) sum += e;
  return sum;
}

void validate_structure(const GffStructure& s) {
  if (s.xi.empty()) throw MathError("framed structure needs at least one characteristic field");
  if (s.eta.size() != s.xi.size() || s.epsilon.size() != s.xi.size()) {
    throw MathError("framed structure: xi, eta, epsilon must have equal length");
  }
  if (s.phi.contravariant_rank() != 1 || s.phi.covariant_rank() != 1) {
    throw MathError("framed structure: phi must be a (1,1) field");
  }
  for (std::size_t a = 0; a < s.xi.size(); ++a) {
    if (s.xi[a].contravariant_rank() != 1 || s.xi[a].covariant_rank() != 0 ||
        !(s.xi[a].chart() == s.phi.chart())) {
      throw MathError("framed structure: xi entries must be vector fields on phi's chart");
    }
    if (s.eta[a].contravariant_rank() != 0 || s.eta[a].covariant_rank() != 1 ||
        !(s.eta[a].chart() == s.phi.chart())) {
      throw MathError("framed structure: eta entries must be one-forms on phi's chart");
    }
    if (s.epsilon[a] != 1 && s.epsilon[a] != -1) {
      throw MathError("framed structure: epsilon entries must be +1 or -1");
    }
  }
}

TensorField fundamental_two_form(const TensorField& g, const GffStructure& s) {
  const Chart& chart = g.chart();
  const std::size_t n = chart.dim();
  TensorField form(chart, 0, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      RationalExpr sum = chart.zero();
      for (std::size_t k = 0; k < n; ++k) {
        if (g(i, k).is_zero() || s.phi(k, j).is_zero()) continue;
        sum += g(i, k) * s.phi(k, j);
      }
      form(i, j) = sum;
    }
  }
  return form;
}

TensorField nijenhuis(const TensorField& phi) {
  const Chart& chart = phi.chart();
  const std::size_t n = chart.dim();

  std::vector<TensorField> frame;
  std::vector<TensorField> phi_frame;
  frame.reserve(n);
  phi_frame.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<RationalExpr> comps(n, chart.zero());
    comps[i] = chart.one();
    frame.push_back(vector_field(chart, std::move(comps)));
    phi_frame.push_back(endo_on(phi, frame.back()));
  }

  TensorField torsion(chart, 1, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Coordinate fields commute, so the phi^2 [X,Y] term drops out.
      const TensorField nij = lie_bracket(phi_frame[i], phi_frame[j]) -
                              endo_on(phi, lie_bracket(phi_frame[i], frame[j])) -
                              endo_on(phi, lie_bracket(frame[i], phi_frame[j]));
      for (std::size_t k = 0; k < n; ++k) {
        torsion(k, i, j) = nij(k);
        torsion(k, j, i) = -nij(k);
      }
    }
  }
  return torsion;
}

TensorField xi_bar(const GffStructure& s) {
  TensorField sum = s.xi[0];
  for (std::size_t a = 1; a < s.xi.size(); ++a) sum = sum + s.xi[a];
  return sum;
}

TensorField eta_bar(const GffStructure& s) {
  const Chart& chart = s.phi.chart();
  TensorField sum = s.eta[0].scaled(chart.scalar(Rat(s.epsilon[0])));
  for (std::size_t a = 1; a < s.eta.size(); ++a) {
    sum = sum + s.eta[a].scaled(chart.scalar(Rat(s.epsilon[a])));
  }
  return sum;
}

std::vector<CheckResult> check_framed_axioms(const TensorField& g, const GffStructure& s) {
  validate_structure(s);
  const Chart& chart = s.phi.chart();
  const std::size_t n = chart.dim();
  const auto& names = chart.coordinates();
  std::vector<CheckResult> out;

  {
    TensorField rhs(chart, 1, 1);
    for (std::size_t a = 0; a < n; ++a) {
      rhs(a, a) = -chart.one();
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t al = 0; al < s.order(); ++al) {
          if (s.xi[al](a).is_zero() || s.eta[al](b).is_zero()) continue;
          rhs(a, b) += s.xi[al](a) * s.eta[al](b);
        }
      }
    }
    out.push_back(compare_fields("phi-square", "phi^2 = -I + sum_a eta^a (x) xi_a",
                                 phi_square(s.phi), rhs));
  }

  {
    CheckResult r = check_pass("eta-xi-pairing", "eta^a(xi_b) = delta^a_b");
    for (std::size_t a = 0; a < s.order() && r.passed; ++a) {
      for (std::size_t b = 0; b < s.order() && r.passed; ++b) {
        const RationalExpr got = one_form_on(s.eta[a], s.xi[b]);
        const RationalExpr want = a == b ? chart.one() : chart.zero();
        if (got != want) {
          r = check_fail(r.id, r.anchor,
                         "eta^" + std::to_string(a + 1) + "(xi_" + std::to_string(b + 1) +
                             ") = " + got.to_string(names));
        }
      }
    }
    out.push_back(std::move(r));
  }

  {
    CheckResult r = check_pass("phi-annihilates-xi", "phi xi_a = 0");
    for (std::size_t a = 0; a < s.order() && r.passed; ++a) {
      const TensorField im = endo_on(s.phi, s.xi[a]);
      for (std::size_t k = 0; k < n && r.passed; ++k) {
        if (!im(k).is_zero()) {
          r = check_fail(r.id, r.anchor,
                         "(phi xi_" + std::to_string(a + 1) + ")(" + names[k] +
                             ") = " + im(k).to_string(names));
        }
      }
    }
    out.push_back(std::move(r));
  }

  {
    CheckResult r = check_pass("eta-annihilates-phi-range", "eta^a o phi = 0");
    for (std::size_t a = 0; a < s.order() && r.passed; ++a) {
      for (std::size_t b = 0; b < n && r.passed; ++b) {
        RationalExpr sum = chart.zero();
        for (std::size_t mm = 0; mm < n; ++mm) {
          if (s.eta[a](mm).is_zero() || s.phi(mm, b).is_zero()) continue;
          sum += s.eta[a](mm) * s.phi(mm, b);
        }
        if (!sum.is_zero()) {
          r = check_fail(r.id, r.anchor,
                         "(eta^" + std::to_string(a + 1) + " o phi)(" + names[b] +
                             ") = " + sum.to_string(names));
        }
      }
    }
    out.push_back(std::move(r));
  }

  {
    TensorField rhs = g;
    for (std::size_t al = 0; al < s.order(); ++al) {
      const RationalExpr sign = chart.scalar(Rat(s.epsilon[al]));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (s.eta[al](i).is_zero() || s.eta[al](j).is_zero()) continue;
          rhs(i, j) -= sign * s.eta[al](i) * s.eta[al](j);
        }
      }
    }
    out.push_back(compare_fields("metric-phi-compatibility",
                                 "g(phiX, phiY) = g(X,Y) - sum_a eps_a eta^a(X) eta^a(Y)",
                                 phi_pullback_metric(g, s.phi), rhs));
  }

  for (std::size_t a = 0; a < s.order(); ++a) {
    std::vector<RationalExpr> lowered(n, chart.zero());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (g(i, j).is_zero() || s.xi[a](j).is_zero()) continue;
        lowered[i] += g(i, j) * s.xi[a](j);
      }
      lowered[i] = chart.scalar(Rat(s.epsilon[a])) * lowered[i];
    }
    out.push_back(compare_fields(tag("eta-metric-duality", a), "eta^a(X) = eps_a g(X, xi_a)",
                                 s.eta[a], one_form(chart, std::move(lowered))));
  }

  {
    const TensorField form = fundamental_two_form(g, s);
    TensorField sym(chart, 0, 2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) sym(i, j) = form(i, j) + form(j, i);
    }
    out.push_back(
        expect_zero("fundamental-form-antisymmetry", "g(X, phiY) = -g(Y, phiX)", sym));
  }

  return out;
}

std::vector<CheckResult> check_normality(const GffStructure& s) {
  validate_structure(s);
  TensorField total = nijenhuis(s.phi);
  const RationalExpr two = s.phi.chart().scalar(Rat(2));
  for (std::size_t a = 0; a < s.order(); ++a) {
    total = total + tensor_product(s.xi[a], exterior_derivative(s.eta[a])).scaled(two);
  }
  return {expect_zero("normality", "N_phi + 2 sum_a d(eta^a) (x) xi_a = 0", total)};
}

std::vector<CheckResult> check_metric_structure(const Metric& m, const TensorField& gamma,
                                                const GffStructure& s) {
  validate_structure(s);
  const Chart& chart = s.phi.chart();
  const std::size_t n = chart.dim();
  std::vector<CheckResult> out;

  const TensorField form = fundamental_two_form(m.g, s);
  for (std::size_t a = 0; a < s.order(); ++a) {
    out.push_back(compare_fields(tag("deta-equals-fundamental-form", a),
                                 "d(eta^a)(X,Y) = g(X, phiY)", exterior_derivative(s.eta[a]),
                                 form));
  }

  {
    const TensorField nabla_phi = covariant_derivative_tensor(gamma, s.phi);  // (a; i, b)
    const TensorField gphiphi = phi_pullback_metric(m.g, s.phi);
    const TensorField phisq = phi_square(s.phi);
    const TensorField xb = xi_bar(s);
    const TensorField eb = eta_bar(s);
    TensorField rhs(chart, 1, 2);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t b = 0; b < n; ++b) {
          rhs(a, i, b) = gphiphi(i, b) * xb(a) + eb(b) * phisq(a, i);
        }
      }
    }
    out.push_back(compare_fields("phi-covariant-rule",
                                 "(nabla_X phi)Y = g(phiX, phiY) xi_bar + eta_bar(Y) phi^2 X",
                                 nabla_phi, rhs));
  }

  for (std::size_t a = 0; a < s.order(); ++a) {
    const TensorField got = covariant_derivative_tensor(gamma, s.xi[a]);  // (k; i)
    const TensorField want = s.phi.scaled(chart.scalar(Rat(-s.epsilon[a])));
    out.push_back(
        compare_fields(tag("xi-covariant-rule", a), "nabla_X xi_a = -eps_a phi X", got, want));
  }

  return out;
}

}  // namespace lightframe

#ifndef LIGHTFRAME_TESTS_FIXTURES_HPP
#define LIGHTFRAME_TESTS_FIXTURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "lightframe/connection.hpp"
#include "lightframe/framed.hpp"
#include "lightframe/hypersurface.hpp"
#include "lightframe/metric.hpp"

namespace fixtures {

struct Ambient {
  lightframe::Chart chart;
  lightframe::TensorField g;
  lightframe::GffStructure s;
};

// Six-dimensional structure with spacelike characteristic fields (eps = +1,+1).
inline Ambient spacelike_r6() {
  using namespace lightframe;
  Chart chart("r6", {"x1", "x2", "y1", "y2", "z1", "z2"});
  TensorField g(chart, 0, 2);
  auto set = [&](std::size_t i, std::size_t j, const std::string& s) {
    g(i, j) = chart.parse(s);
    g(j, i) = g(i, j);
  };
  set(0, 0, "2*y1^2-1/2");
  set(1, 1, "2*y2^2+1/2");
  set(0, 1, "-2*y1*y2");
  set(0, 4, "y1");
  set(0, 5, "y1");
  set(1, 4, "-y2");
  set(1, 5, "-y2");
  set(2, 2, "-1/2");
  set(3, 3, "1/2");
  set(4, 4, "1");
  set(5, 5, "1");

  TensorField phi(chart, 1, 1);
  phi(2, 0) = chart.parse("-1");
  phi(3, 1) = chart.parse("-1");
  phi(0, 2) = chart.parse("1");
  phi(4, 2) = chart.parse("-y1");
  phi(5, 2) = chart.parse("-y1");
  phi(1, 3) = chart.parse("1");
  phi(4, 3) = chart.parse("y2");
  phi(5, 3) = chart.parse("y2");

  auto unit = [&](std::size_t k) {
    std::vector<RationalExpr> c(6, chart.zero());
    c[k] = chart.one();
    return vector_field(chart, std::move(c));
  };
  TensorField eta1 = one_form(chart, {chart.parse("y1"), chart.parse("-y2"), chart.zero(),
                                      chart.zero(), chart.one(), chart.zero()});
  TensorField eta2 = one_form(chart, {chart.parse("y1"), chart.parse("-y2"), chart.zero(),
                                      chart.zero(), chart.zero(), chart.one()});
  GffStructure s{phi, {unit(4), unit(5)}, {eta1, eta2}, {+1, +1}};
  return Ambient{chart, g, s};
}

// Six-dimensional structure with timelike characteristic fields (eps = -1,-1).
inline Ambient timelike_r6() {
  using namespace lightframe;
  Chart chart("r6", {"x1", "x2", "y1", "y2", "z1", "z2"});
  TensorField g(chart, 0, 2);
  auto set = [&](std::size_t i, std::size_t j, const std::string& s) {
    g(i, j) = chart.parse(s);
    g(j, i) = g(i, j);
  };
  set(0, 0, "-2*y1^2+1/2");
  set(1, 1, "-2*y2^2+1/2");
  set(0, 1, "-2*y1*y2");
  set(0, 4, "y1");
  set(0, 5, "y1");
  set(1, 4, "y2");
  set(1, 5, "y2");
  set(2, 2, "1/2");
  set(3, 3, "1/2");
  set(4, 4, "-1");
  set(5, 5, "-1");

  TensorField phi(chart, 1, 1);
  phi(2, 0) = chart.parse("-1");
  phi(3, 1) = chart.parse("-1");
  phi(0, 2) = chart.parse("1");
  phi(4, 2) = chart.parse("y1");
  phi(5, 2) = chart.parse("y1");
  phi(1, 3) = chart.parse("1");
  phi(4, 3) = chart.parse("y2");
  phi(5, 3) = chart.parse("y2");

  auto unit = [&](std::size_t k) {
    std::vector<RationalExpr> c(6, chart.zero());
    c[k] = chart.one();
    return vector_field(chart, std::move(c));
  };
  TensorField eta1 = one_form(chart, {chart.parse("-y1"), chart.parse("-y2"), chart.zero(),
                                      chart.zero(), chart.one(), chart.zero()});
  TensorField eta2 = one_form(chart, {chart.parse("-y1"), chart.parse("-y2"), chart.zero(),
                                      chart.zero(), chart.zero(), chart.one()});
  GffStructure s{phi, {unit(4), unit(5)}, {eta1, eta2}, {-1, -1}};
  return Ambient{chart, g, s};
}

// Four-dimensional structure with one spacelike and one timelike
// characteristic field (eps = +1,-1); the metric is Lorentzian.
inline Ambient lorentz_r4() {
  using namespace lightframe;
  Chart chart("r4", {"x1", "y1", "z1", "z2"});
  TensorField g(chart, 0, 2);
  auto set = [&](std::size_t i, std::size_t j, const std::string& s) {
    g(i, j) = chart.parse(s);
    g(j, i) = g(i, j);
  };
  set(0, 0, "1/2");
  set(1, 1, "1/2");
  set(0, 2, "y1");
  set(0, 3, "-y1");
  set(2, 2, "1");
  set(3, 3, "-1");

  TensorField phi(chart, 1, 1);
  phi(1, 0) = chart.parse("1");
  phi(0, 1) = chart.parse("-1");
  phi(2, 1) = chart.parse("y1");
  phi(3, 1) = chart.parse("y1");

  auto unit = [&](std::size_t k) {
    std::vector<RationalExpr> c(4, chart.zero());
    c[k] = chart.one();
    return vector_field(chart, std::move(c));
  };
  TensorField eta1 =
      one_form(chart, {chart.parse("y1"), chart.zero(), chart.one(), chart.zero()});
  TensorField eta2 =
      one_form(chart, {chart.parse("y1"), chart.zero(), chart.zero(), chart.one()});
  GffStructure s{phi, {unit(2), unit(3)}, {eta1, eta2}, {+1, -1}};
  return Ambient{chart, g, s};
}

// Lightlike sheet u -> (u1+u5, u2, u3, u1+u5, u4, u5) inside the spacelike
// six-dimensional structure; both characteristic fields are tangent to it.
inline lightframe::Immersion sheet_immersion(const Ambient& a) {
  using namespace lightframe;
  Chart u("sheet", {"u1", "u2", "u3", "u4", "u5"});
  std::vector<RationalExpr> f = {u.parse("u1+u5"), u.parse("u2"),      u.parse("u3"),
                                 u.parse("u1+u5"), u.parse("u4"),      u.parse("u5")};
  return make_immersion(u, a.chart, std::move(f));
}

// The sheet together with its characteristic frame: the radical section is
// seeded with -d/dx1 - d/dy2 + y1 (xi_1 + xi_2) and the auxiliary field comes
// from the deterministic scan.
struct SheetGeometry {
  Ambient ambient;
  lightframe::Metric metric;
  lightframe::TensorField gamma;
  lightframe::LightlikeFrame frame;
};

inline SheetGeometry sheet_geometry() {
  using namespace lightframe;
  Ambient a = spacelike_r6();
  Metric m = make_metric(a.g);
  TensorField gamma = christoffel(m);
  Immersion imm = sheet_immersion(a);
  TensorField seed = vector_field(
      a.chart, {a.chart.parse("-1"), a.chart.zero(), a.chart.zero(), a.chart.parse("-1"),
                a.chart.parse("y1"), a.chart.parse("y1")});
  FieldAlong e = radical_section(imm, m, seed);
  FieldAlong z = scan_transversal(imm, m, a.s, e);
  FieldAlong n = transversal_section(imm, m, e, z);
  LightlikeFrame frame = characteristic_screen(imm, m, a.s, e, z, n);
  return SheetGeometry{std::move(a), std::move(m), std::move(gamma), std::move(frame)};
}

// Flat control structure: constant metric and framed tensors on R^6, so the
// ambient connection vanishes identically.
inline Ambient flat_r6() {
  using namespace lightframe;
  Chart chart("f6", {"x1", "x2", "y1", "y2", "z1", "z2"});
  TensorField g(chart, 0, 2);
  g(0, 0) = chart.one();
  g(1, 1) = chart.parse("-1");
  g(2, 2) = chart.one();
  g(3, 3) = chart.parse("-1");
  g(4, 4) = chart.one();
  g(5, 5) = chart.one();

  TensorField phi(chart, 1, 1);
  phi(2, 0) = chart.parse("1");
  phi(0, 2) = chart.parse("-1");
  phi(3, 1) = chart.parse("1");
  phi(1, 3) = chart.parse("-1");

  auto unit = [&](std::size_t k) {
    std::vector<RationalExpr> c(6, chart.zero());
    c[k] = chart.one();
    return vector_field(chart, std::move(c));
  };
  auto dual = [&](std::size_t k) {
    std::vector<RationalExpr> c(6, chart.zero());
    c[k] = chart.one();
    return one_form(chart, std::move(c));
  };
  GffStructure s{phi, {unit(4), unit(5)}, {dual(4), dual(5)}, {+1, +1}};
  return Ambient{chart, g, s};
}

// Totally geodesic sheet u -> (u1, u1, u2, u3, u4, u5) inside the flat
// structure: the radical is spanned by d/dx1 + d/dx2 and every induced form
// vanishes.
inline SheetGeometry flat_sheet_geometry() {
  using namespace lightframe;
  Ambient a = flat_r6();
  Metric m = make_metric(a.g);
  TensorField gamma = christoffel(m);
  Chart u("flat-sheet", {"u1", "u2", "u3", "u4", "u5"});
  std::vector<RationalExpr> f = {u.parse("u1"), u.parse("u1"), u.parse("u2"),
                                 u.parse("u3"), u.parse("u4"), u.parse("u5")};
  Immersion imm = make_immersion(u, a.chart, std::move(f));
  FieldAlong e = radical_section(imm, m);
  FieldAlong z = scan_transversal(imm, m, a.s, e);
  FieldAlong n = transversal_section(imm, m, e, z);
  LightlikeFrame frame = characteristic_screen(imm, m, a.s, e, z, n);
  return SheetGeometry{std::move(a), std::move(m), std::move(gamma), std::move(frame)};
}

}  // namespace fixtures

#endif

#include <doctest.h>

#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fixtures.hpp"
#include "lightframe/error.hpp"
#include "lightframe/hypersurface.hpp"
#include "lightframe/linalg.hpp"
#include "lightframe/metric.hpp"

using namespace lightframe;

namespace {

// gbar(x, y) along an immersion, straight from the pulled metric components.
RationalExpr pair_along(const Immersion& imm, const Metric& m, const FieldAlong& x,
                        const FieldAlong& y) {
  RationalExpr out = imm.u_chart.zero();
  for (std::size_t a = 0; a < x.ambient.size(); ++a) {
    for (std::size_t b = 0; b < y.ambient.size(); ++b) {
      out += pullback_scalar(imm, m.g(a, b)) * x.ambient[a] * y.ambient[b];
    }
  }
  return out;
}

std::vector<RationalExpr> ambient_over_u(const Immersion& imm, const std::string& x1,
                                         const std::string& x2, const std::string& x3,
                                         const std::string& x4, const std::string& x5,
                                         const std::string& x6) {
  const Chart& u = imm.u_chart;
  return {u.parse(x1), u.parse(x2), u.parse(x3), u.parse(x4), u.parse(x5), u.parse(x6)};
}

}  // namespace

TEST_CASE("sheet Jacobian minors single out the two non-tangent directions") {
  auto a = fixtures::spacelike_r6();
  Immersion imm = fixtures::sheet_immersion(a);
  std::vector<RationalExpr> d = jacobian_minors(imm);
  REQUIRE(d.size() == 6);
  CHECK(d[0].is_one());
  CHECK(d[1].is_zero());
  CHECK(d[2].is_zero());
  CHECK(d[3].is_one());
  CHECK(d[4].is_zero());
  CHECK(d[5].is_zero());
}

TEST_CASE("metric minor table of the spacelike structure") {
  auto a = fixtures::spacelike_r6();
  Metric m = make_metric(a.g);
  Matrix mm = metric_minors(m);
  std::map<std::pair<std::size_t, std::size_t>, std::string> want = {
      {{0, 0}, "-1/8"},
      {{2, 2}, "-1/8"},
      {{1, 1}, "1/8"},
      {{3, 3}, "1/8"},
      {{4, 4}, "1/16+y2^2/8-y1^2/8"},
      {{5, 5}, "1/16+y2^2/8-y1^2/8"},
      {{0, 4}, "y1/8"},
      {{0, 5}, "-y1/8"},
      {{1, 4}, "-y2/8"},
      {{1, 5}, "y2/8"},
      {{4, 5}, "y1^2/8-y2^2/8"},
  };
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      auto hit = want.find({std::min(i, j), std::max(i, j)});
      INFO("entry (", i + 1, ", ", j + 1, ")");
      if (hit == want.end()) {
        CHECK(mm[i][j].is_zero());
      } else {
        CHECK(mm[i][j] == a.chart.parse(hit->second));
      }
    }
  }
}

TEST_CASE("metric minor table of the timelike structure") {
  auto a = fixtures::timelike_r6();
  Metric m = make_metric(a.g);
  Matrix mm = metric_minors(m);
  std::map<std::pair<std::size_t, std::size_t>, std::string> want = {
      {{0, 0}, "1/8"},
      {{1, 1}, "1/8"},
      {{2, 2}, "1/8"},
      {{3, 3}, "1/8"},
      {{4, 4}, "-1/16+y1^2/8+y2^2/8"},
      {{5, 5}, "-1/16+y1^2/8+y2^2/8"},
      {{0, 4}, "y1/8"},
      {{0, 5}, "-y1/8"},
      {{1, 4}, "-y2/8"},
      {{1, 5}, "y2/8"},
      {{4, 5}, "-y1^2/8-y2^2/8"},
  };
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      auto hit = want.find({std::min(i, j), std::max(i, j)});
      INFO("entry (", i + 1, ", ", j + 1, ")");
      if (hit == want.end()) {
        CHECK(mm[i][j].is_zero());
      } else {
        CHECK(mm[i][j] == a.chart.parse(hit->second));
      }
    }
  }
}

TEST_CASE("sheet is lightlike by both determinant routes") {
  auto a = fixtures::spacelike_r6();
  Metric m = make_metric(a.g);
  Immersion imm = fixtures::sheet_immersion(a);
  LightlikeVerdict v = lightlike_test(imm, m);
  CHECK(v.lightlike);
  CHECK(v.delta.is_zero());
}

TEST_CASE("a graph over the first five coordinates is not lightlike") {
  auto a = fixtures::spacelike_r6();
  Metric m = make_metric(a.g);
  Chart u("graph", {"u1", "u2", "u3", "u4", "u5"});
  Immersion imm = make_immersion(
      u, a.chart,
      {u.parse("u1"), u.parse("u2"), u.parse("u3"), u.parse("u4"), u.parse("u5"), u.zero()});
  LightlikeVerdict v = lightlike_test(imm, m);
  CHECK_FALSE(v.lightlike);
  CHECK_FALSE(v.delta.is_zero());
  CHECK_THROWS_AS((void)radical_section(imm, m), MathError);
}

TEST_CASE("coordinate tangency matches the vanishing of the deleted-column minor") {
  auto a = fixtures::spacelike_r6();
  Immersion imm = fixtures::sheet_immersion(a);
  std::vector<RationalExpr> d = jacobian_minors(imm);
  for (std::size_t k = 0; k < 6; ++k) {
    std::vector<RationalExpr> c(6, a.chart.zero());
    c[k] = a.chart.one();
    INFO("coordinate ", k + 1);
    CHECK(tangency_test(imm, vector_field(a.chart, std::move(c))).has_value() ==
          d[k].is_zero());
  }
}

TEST_CASE("the second characteristic field resolves as the last minus the first frame field") {
  auto a = fixtures::spacelike_r6();
  Immersion imm = fixtures::sheet_immersion(a);
  auto coeffs = tangency_test(imm, a.s.xi[1]);
  REQUIRE(coeffs.has_value());
  const Chart& u = imm.u_chart;
  std::vector<RationalExpr> want = {u.parse("-1"), u.zero(), u.zero(), u.zero(), u.one()};
  CHECK(*coeffs == want);
}

TEST_CASE("radical section accepts the seeded generator and normalizes the constructed one") {
  auto a = fixtures::spacelike_r6();
  Metric m = make_metric(a.g);
  Immersion imm = fixtures::sheet_immersion(a);
  TensorField seed = vector_field(
      a.chart, {a.chart.parse("-1"), a.chart.zero(), a.chart.zero(), a.chart.parse("-1"),
                a.chart.parse("y1"), a.chart.parse("y1")});

  FieldAlong e = radical_section(imm, m, seed);
  CHECK(e.ambient == ambient_over_u(imm, "-1", "0", "0", "-1", "u3", "u3"));
  REQUIRE(e.tangent());
  const Chart& u = imm.u_chart;
  std::vector<RationalExpr> want = {u.parse("-1-u3"), u.zero(), u.zero(), u.parse("u3"),
                                    u.parse("u3")};
  CHECK(*e.coeffs == want);
  CHECK(pair_along(imm, m, e, e).is_zero());

  FieldAlong built = radical_section(imm, m);
  CHECK(built.ambient == ambient_over_u(imm, "1", "0", "0", "1", "-u3", "-u3"));

  TensorField off_kernel = vector_field(a.chart, {a.chart.zero(), a.chart.one(), a.chart.zero(),
                                                  a.chart.zero(), a.chart.zero(), a.chart.zero()});
  CHECK_THROWS_AS((void)radical_section(imm, m, off_kernel), MathError);
}

TEST_CASE("auxiliary scan and transversal section reproduce the null pair") {
  auto a = fixtures::spacelike_r6();
  Metric m = make_metric(a.g);
  Immersion imm = fixtures::sheet_immersion(a);
  TensorField seed = vector_field(
      a.chart, {a.chart.parse("-1"), a.chart.zero(), a.chart.zero(), a.chart.parse("-1"),
                a.chart.parse("y1"), a.chart.parse("y1")});
  FieldAlong e = radical_section(imm, m, seed);

  FieldAlong z = scan_transversal(imm, m, a.s, e);
  CHECK(z.ambient == ambient_over_u(imm, "1", "0", "0", "0", "-u3", "-u3"));
  CHECK(pair_along(imm, m, z, e) == imm.u_chart.parse("1/2"));

  FieldAlong n = transversal_section(imm, m, e, z);
  CHECK(n.ambient == ambient_over_u(imm, "1", "0", "0", "-1", "-u3", "-u3"));
  CHECK(pair_along(imm, m, n, e).is_one());
  CHECK(pair_along(imm, m, n, n).is_zero());

  CHECK_THROWS_AS((void)transversal_section(imm, m, e, e), MathError);
}

TEST_CASE("characteristic frame of the sheet") {
  fixtures::SheetGeometry geo = fixtures::sheet_geometry();
  const LightlikeFrame& fr = geo.frame;
  const Immersion& imm = fr.imm;

  CHECK(fr.E.ambient == ambient_over_u(imm, "-1", "0", "0", "-1", "u3", "u3"));
  CHECK(fr.N.ambient == ambient_over_u(imm, "1", "0", "0", "-1", "-u3", "-u3"));
  CHECK(fr.phiE.ambient == ambient_over_u(imm, "0", "-1", "1", "0", "-u1-u5", "-u1-u5"));
  CHECK(fr.phiN.ambient == ambient_over_u(imm, "0", "-1", "-1", "0", "-u1-u5", "-u1-u5"));
  CHECK(fr.U.ambient == ambient_over_u(imm, "0", "1", "1", "0", "u1+u5", "u1+u5"));
  CHECK(fr.V.ambient == ambient_over_u(imm, "0", "1", "-1", "0", "u1+u5", "u1+u5"));

  const Chart& u = imm.u_chart;
  REQUIRE(fr.phiE.tangent());
  std::vector<RationalExpr> phie_coeffs = {u.parse("u1+u5"), u.parse("-1"), u.one(),
                                           u.parse("-u1-u5"), u.parse("-u1-u5")};
  CHECK(*fr.phiE.coeffs == phie_coeffs);
  REQUIRE(fr.phiN.tangent());
  std::vector<RationalExpr> phin_coeffs = {u.parse("u1+u5"), u.parse("-1"), u.parse("-1"),
                                           u.parse("-u1-u5"), u.parse("-u1-u5")};
  CHECK(*fr.phiN.coeffs == phin_coeffs);

  REQUIRE(fr.xi.size() == 2);
  CHECK(fr.xi[0].ambient == ambient_over_u(imm, "0", "0", "0", "0", "1", "0"));
  CHECK(fr.xi[1].ambient == ambient_over_u(imm, "0", "0", "0", "0", "0", "1"));

  REQUIRE(fr.screen.size() == 4);
  CHECK(fr.screen[0] == fr.xi[0]);
  CHECK(fr.screen[1] == fr.xi[1]);
  CHECK(fr.screen[2] == fr.phiE);
  CHECK(fr.screen[3] == fr.phiN);
  CHECK(fr.screen_index == 1);

  REQUIRE(fr.d0.size() == 2);
  CHECK(fr.d0[0] == fr.xi[0]);
  CHECK(fr.d0[1] == fr.xi[1]);
  REQUIRE(fr.d.size() == 4);
  CHECK(fr.d[2] == fr.V);
  CHECK(fr.d[3] == fr.E);

  CHECK(pair_along(imm, geo.metric, fr.phiN, fr.phiE).is_one());
  CHECK(pair_along(imm, geo.metric, fr.phiE, fr.phiE).is_zero());
  CHECK(pair_along(imm, geo.metric, fr.phiN, fr.phiN).is_zero());
  for (const FieldAlong& w : fr.screen) {
    CHECK(pair_along(imm, geo.metric, w, fr.N).is_zero());
    CHECK(pair_along(imm, geo.metric, w, fr.E).is_zero());
  }
}

TEST_CASE("screen complement of the sheet spans the documented pair") {
  fixtures::SheetGeometry geo = fixtures::sheet_geometry();
  std::vector<std::vector<RationalExpr>> perp = screen_perp(geo.frame, geo.metric);
  REQUIRE(perp.size() == 2);

  const Immersion& imm = geo.frame.imm;
  std::vector<std::vector<RationalExpr>> expected = {
      ambient_over_u(imm, "1", "0", "0", "0", "-u3", "-u3"),
      ambient_over_u(imm, "0", "0", "0", "1", "0", "0")};
  Matrix span;
  for (const auto& v : perp) span.push_back(v);
  CHECK(matrix_rank(span) == 2);
  for (const auto& v : expected) span.push_back(v);
  CHECK(matrix_rank(span) == 2);

  for (const auto& v : perp) {
    FieldAlong w{v, std::nullopt};
    for (const FieldAlong& s : geo.frame.screen) {
      CHECK(pair_along(imm, geo.metric, w, s).is_zero());
    }
  }
}

TEST_CASE("characteristic frame needs at least two holomorphic pairs") {
  auto a = fixtures::lorentz_r4();
  Metric m = make_metric(a.g);
  Chart u("slice", {"u1", "u2", "u3"});
  Immersion imm =
      make_immersion(u, a.chart, {u.parse("u1"), u.parse("u2"), u.parse("u3"), u.zero()});
  FieldAlong dummy = tangent_field(imm, {u.one(), u.zero(), u.zero()});
  CHECK_THROWS_AS((void)characteristic_screen(imm, m, a.s, dummy, dummy, dummy), MathError);
}

TEST_CASE("existence filter separates the three structures") {
  {
    auto a = fixtures::timelike_r6();
    ObstructionVerdict v = characteristic_obstruction(make_metric(a.g), a.s);
    CHECK(v.nonexistence);
    CHECK(v.reason.find("definite") != std::string::npos);
  }
  {
    auto a = fixtures::spacelike_r6();
    ObstructionVerdict v = characteristic_obstruction(make_metric(a.g), a.s);
    CHECK_FALSE(v.nonexistence);
    CHECK(v.reason.find("indefinite") != std::string::npos);
  }
  {
    auto a = fixtures::lorentz_r4();
    ObstructionVerdict v = characteristic_obstruction(make_metric(a.g), a.s);
    CHECK(v.nonexistence);
    CHECK(v.reason.find("dimension") != std::string::npos);
  }
}

namespace {

RationalExpr random_affine(std::mt19937& rng, const Chart& chart) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  RationalExpr out = chart.scalar(Rat(coeff(rng)));
  for (std::size_t i = 0; i < chart.dim(); ++i) {
    out += chart.scalar(Rat(coeff(rng))) * chart.coordinate(i);
  }
  return out;
}

Metric random_metric(std::mt19937& rng, const Chart& chart) {
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<int> pick(0, 3);
  const std::size_t m = chart.dim();
  for (;;) {
    TensorField g(chart, 0, 2);
    for (std::size_t i = 0; i < m; ++i) {
      g(i, i) = chart.scalar(Rat(sign(rng) ? 1 : -1));
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (pick(rng) == 0) {
          RationalExpr v = random_affine(rng, chart);
          g(i, j) = v;
          g(j, i) = v;
        }
      }
    }
    try {
      return make_metric(g);
    } catch (const MathError&) {
      // degenerate draw; try again
    }
  }
}

Immersion random_immersion(std::mt19937& rng, const Chart& u, const Chart& x) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> quad(0, 2);
  for (;;) {
    std::vector<RationalExpr> f;
    for (std::size_t a = 0; a < x.dim(); ++a) {
      RationalExpr comp = random_affine(rng, u);
      if (quad(rng) == 0) {
        std::uniform_int_distribution<std::size_t> var(0, u.dim() - 1);
        comp += u.scalar(Rat(coeff(rng))) * u.coordinate(var(rng)) * u.coordinate(var(rng));
      }
      f.push_back(comp);
    }
    try {
      return make_immersion(u, x, std::move(f));
    } catch (const MathError&) {
      // rank dropped; try again
    }
  }
}

}  // namespace

TEST_CASE("random immersions: minor expansion agrees with the direct determinant") {
  std::mt19937 rng(611953u);
  const std::vector<std::string> xnames = {"a1", "a2", "a3", "a4", "a5"};
  const std::vector<std::string> unames = {"u1", "u2", "u3", "u4"};
  std::size_t checked = 0;
  for (std::size_t trial = 0; trial < 51; ++trial) {
    const std::size_t m = 3 + trial % 3;
    Chart x("amb" + std::to_string(trial),
            std::vector<std::string>(xnames.begin(), xnames.begin() + m));
    Chart u("par" + std::to_string(trial),
            std::vector<std::string>(unames.begin(), unames.begin() + (m - 1)));
    Metric g = random_metric(rng, x);
    Immersion imm = random_immersion(rng, u, x);

    // lightlike_test already faults internally when the two routes disagree;
    // re-derive route one here to pin the reported value as well.
    LightlikeVerdict v = lightlike_test(imm, g);
    RationalExpr direct = determinant(metric_matrix(induced_metric(imm, g)));
    CHECK(v.delta == direct);
    CHECK(v.lightlike == direct.is_zero());

    std::vector<RationalExpr> d = jacobian_minors(imm);
    for (std::size_t k = 0; k < m; ++k) {
      std::vector<RationalExpr> c(m, x.zero());
      c[k] = x.one();
      CHECK(tangency_test(imm, vector_field(x, std::move(c))).has_value() == d[k].is_zero());
    }
    ++checked;
  }
  CHECK(checked == 51);
}

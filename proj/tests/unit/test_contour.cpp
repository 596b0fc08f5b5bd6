#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "stieltjes/contour.hpp"
#include "stieltjes/core.hpp"
#include "stieltjes/errors.hpp"

using namespace stieltjes;
using namespace stieltjes::contour;

TEST_CASE("context validation") {
  CHECK_THROWS_AS(make_context(0, 3.0, 1.0), DomainError);
  CHECK_THROWS_AS(make_context(1, 0.5, 1.0), DomainError);
  CHECK_THROWS_AS(make_context(1, 3.0, 1.2), DomainError);
  CHECK(make_context(1, 3.0, 1.0).b == doctest::Approx(std::log(2.0)));
}

TEST_CASE("phase derivatives against finite differences") {
  const auto ctx = make_context(3, 7.5, 0.4);
  for (ComplexPoint y : {ComplexPoint(0.3, 0.2), ComplexPoint(1.1, 0.9), ComplexPoint(2.5, 1.4)}) {
    const double eps = 1e-6;
    const auto d1 = (h(ctx, y + eps) - h(ctx, y - eps)) / (2 * eps);
    const auto d2 = (h_prime(ctx, y + eps) - h_prime(ctx, y - eps)) / (2 * eps);
    CHECK(std::abs(d1 - h_prime(ctx, y)) < 1e-6 * std::abs(h_prime(ctx, y)));
    CHECK(std::abs(d2 - h_second(ctx, y)) < 1e-6 * std::abs(h_second(ctx, y)));
  }
}

TEST_CASE("amplitude for v = 2 matches its closed form") {
  const auto ctx = make_context(1, 6.0, 1.0);
  const ComplexPoint y(0.8, 0.3);
  const auto ref = (6.0 * 5.0 - 18.0 * y + 2.0 * y * y) / (y * y);
  CHECK(std::abs(q(ctx, y) - ref) < 1e-13 * std::abs(ref));
}

TEST_CASE("saddle is a critical point") {
  for (int k : {1, 7, 40}) {
    for (double alpha : {2.0, 50.0, 200.0}) {
      const auto ctx = make_context(k, alpha, 1.0);
      const auto w = saddle(ctx);
      CHECK(std::abs(h_prime(ctx, w)) < 1e-10 * (alpha + 2 * std::numbers::pi * k * std::abs(std::exp(w))));
    }
  }
}

TEST_CASE("saddle fixtures") {
  const auto w1 = saddle(make_context(1, 200.0, 1.0));
  CHECK(std::abs(w1 - ComplexPoint(2.46, 1.14)) < 0.01);
  const auto p40 = build_contour(make_context(40, 200.0, 1.0));
  CHECK(std::abs(p40.saddle - ComplexPoint(0.29, 0.52)) < 0.01);
  CHECK(p40.saddle_inside);
}

TEST_CASE("level line keeps Im h fixed") {
  const auto path = build_contour(make_context(2, 10.0, 1.0));
  const auto& ctx = path.ctx;
  const ComplexPoint start = path.u;
  const auto nodes = trace_level_line(ctx, start, 4.0);
  REQUIRE(nodes.size() > 2);
  const double level = h(ctx, start).imag();
  for (const auto& y : nodes) CHECK(std::fabs(h(ctx, y).imag() - level) < 1e-8 * std::max(1.0, std::fabs(level)));
  CHECK(nodes.back().real() >= 4.0);
}

TEST_CASE("descent halves satisfy h(y(s)) = h(w) - s^2") {
  const auto path = build_contour(make_context(1, 30.0, 1.0));
  const auto hw = h(path.ctx, path.saddle);
  for (const auto* half : {path.origin_half.get(), path.infinity_half.get()}) {
    for (double frac : {0.01, 0.2, 0.5, 0.9}) {
      const double s = frac * half->s_max();
      const auto [y, dy] = half->point(s);
      CHECK(std::abs(h(path.ctx, y) - (hw - s * s)) < 1e-8 * std::max(1.0, std::abs(hw)));
      // dy/ds = -2 s / h'(y)
      CHECK(std::abs(dy * h_prime(path.ctx, y) + 2.0 * s) < 1e-8 * std::max(1.0, s));
    }
  }
}

TEST_CASE("arc roots and the choice of u at k = 1, alpha = 10") {
  const auto path = build_contour(make_context(1, 10.0, 1.0));
  REQUIRE(path.arc_roots.size() == 3);
  CHECK(path.arc_roots[0] == doctest::Approx(0.0309).epsilon(2e-3));
  CHECK(path.arc_roots[1] == doctest::Approx(0.8556).epsilon(1e-3));
  CHECK(path.arc_roots[2] == doctest::Approx(1.1958).epsilon(1e-3));
  CHECK(path.theta_u == doctest::Approx(0.8556).epsilon(1e-3));
  CHECK(std::abs(path.u) == doctest::Approx(1.0));
}

TEST_CASE("path geometry and export") {
  const auto path = build_contour(make_context(1, 200.0, 1.0));
  CHECK(path.theta_u == doctest::Approx(0.5218).epsilon(1e-3));
  CHECK(path.v.real() == doctest::Approx(2.0 * std::log(200.0)).epsilon(1e-9));
  CHECK(h(path.ctx, path.saddle).real() == doctest::Approx(132.66).epsilon(1e-4));
  REQUIRE(path.segments.size() == 4);
  CHECK(path.segment(SegmentKind::unit_arc).nodes.back() == path.u);
  CHECK(level_line_box_excursion(path) == 0.0);
  std::ostringstream os;
  write_path_csv(path, os);
  std::istringstream is(os.str());
  std::string line;
  std::size_t rows = 0, expected = 0;
  for (const auto& s : path.segments) expected += s.nodes.size();
  while (std::getline(is, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 4);
  }
  CHECK(rows == expected);
}

TEST_CASE("contour and real-axis S_k agree") {
  const std::pair<int, double> cases[] = {{1, 3.0}, {1, 7.0}, {2, 7.0}, {5, 15.0}, {3, 1.0}};
  for (const auto& [k, alpha] : cases) {
    const auto ctx = make_context(k, alpha, 1.0);
    const auto c = s_k_contour(ctx);
    const auto r = s_k_real_axis_detailed(ctx, 0.0, 2);
    CAPTURE(k);
    CAPTURE(alpha);
    CHECK(std::abs(c.s_k - r.value) <= 1e-8 * std::abs(r.value) + r.err + c.quad_err);
    CHECK(std::abs(c.s_k - (c.l1 + c.l2 + c.l3 + c.l4)) <= c.quad_err + 1e-14 * std::abs(c.s_k));
  }
  // reference values
  const auto s1 = s_k_contour(make_context(1, 7.0, 1.0)).s_k;
  CHECK(s1.real() == doctest::Approx(-0.027207802923364777).epsilon(1e-10));
  CHECK(s1.imag() == doctest::Approx(0.09210458448691178).epsilon(1e-10));
}

TEST_CASE("real-axis oracle: panel refinement and cut checks") {
  const auto ctx = make_context(1, 7.0, 1.0);
  CHECK(std::abs(s_k_real_axis(ctx, 0.0, 2) - s_k_real_axis(ctx, 0.0, 4)) <= 1e-9);
  CHECK_THROWS_AS(s_k_real_axis(ctx, 1.5, 2), TailCutError);
}

TEST_CASE("segment bounds on a small grid") {
  for (int k : {1, 5}) {
    for (double alpha : {2 * std::numbers::pi, 50.0}) {
      const auto d = s_k_contour(make_context(k, alpha, 0.1));
      CHECK(std::abs(d.l1) < d.bound_l1);
      CHECK(std::abs(d.l2) <= d.bound_l2);
      CHECK(std::abs(d.l3) <= d.bound_l3);
      CHECK(std::abs(d.l4) <= d.bound_l4);
      CHECK(std::abs(d.s_k) <= d.s_bound);
    }
  }
}

TEST_CASE("P2 integral and the S_1 chain") {
  const double p2 = p2_integral(1.0, 1.0);
  const double s1 = std::abs(s_k_contour(make_context(1, 1.0, 1.0)).s_k);
  CHECK(std::fabs(p2) <= s1 / 6.0);
  CHECK_THROWS_AS(p2_integral(0.5, 1.0), DomainError);
}

TEST_CASE("Fourier remainder matches the real-axis remainder") {
  for (int v : {2, 4, 8}) {
    const double alpha = 10.0;
    const auto f = fourier_remainder(alpha, 1.0, v, 1e-13, 400);
    const auto t = core::tail_integral(alpha, 1.0, 1, v);
    double fact = 1.0;
    for (int i = 2; i <= v; ++i) fact *= i;
    const double direct = -t.value / fact;  // (-1)^{v-1} / v! for even v
    CAPTURE(v);
    CHECK(std::fabs(f.value - direct) <= f.err + t.err / fact + 1e-12 * std::fabs(direct));
  }
  CHECK_THROWS_AS(fourier_remainder(10.0, 1.0, 3, 1e-12, 10), ConfigError);
}

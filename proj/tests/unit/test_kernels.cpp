#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "stieltjes/core.hpp"
#include "stieltjes/kernels.hpp"

using namespace stieltjes;
using kernels::Isa;

namespace {

double ulp_distance(double a, double b) {
  if (a == b) return 0.0;
  return std::fabs(a - b) / (std::numeric_limits<double>::epsilon() * std::max(std::fabs(a), std::fabs(b)));
}

std::vector<Isa> available() {
  std::vector<Isa> v{Isa::scalar};
  if (kernels::isa_supported(Isa::avx2)) v.push_back(Isa::avx2);
  return v;
}

}  // namespace

TEST_CASE("active variant is supported") {
  CHECK(kernels::isa_supported(Isa::scalar));
  CHECK(kernels::isa_supported(kernels::active_isa()));
  CHECK(kernels::isa_name(Isa::avx2) == "avx2");
}

TEST_CASE("vexp and vlog within a few ulp of libm") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ex(-700.0, 700.0), lx(-300.0, 300.0);
  constexpr std::size_t n = 4099;  // odd length exercises the remainder path
  std::vector<double> xs(n), ys(n), out(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = ex(rng);
    ys[i] = std::pow(10.0, lx(rng));
  }
  for (Isa isa : available()) {
    CAPTURE(kernels::isa_name(isa));
    kernels::vexp(isa, xs, out);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, ulp_distance(out[i], std::exp(xs[i])));
    CHECK(worst <= 4.0);
    kernels::vlog(isa, ys, out);
    worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, ulp_distance(out[i], std::log(ys[i])));
    CHECK(worst <= 4.0);
  }
}

TEST_CASE("special values of vexp and vlog") {
  const double inf = std::numeric_limits<double>::infinity();
  const std::vector<double> ex{0.0, 800.0, -800.0, -inf, inf};
  const std::vector<double> lx{1.0, 0.0, -1.0, inf, 1e-310};
  std::vector<double> out(5);
  for (Isa isa : available()) {
    kernels::vexp(isa, ex, out);
    CHECK(out[0] == 1.0);
    CHECK(out[1] == inf);
    CHECK(out[2] == 0.0);
    CHECK(out[3] == 0.0);
    CHECK(out[4] == inf);
    kernels::vlog(isa, lx, out);
    CHECK(out[0] == 0.0);
    CHECK(out[1] == -inf);
    CHECK(std::isnan(out[2]));
    CHECK(out[3] == inf);
    CHECK(out[4] == doctest::Approx(std::log(1e-310)).epsilon(1e-13));
  }
}

TEST_CASE("log-power series: variants agree and match f_deriv") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ax(0.0, 40.0), xx(1.0, 5000.0);
  for (int trial = 0; trial < 40; ++trial) {
    const double alpha = ax(rng);
    const int n = trial % 9;
    const double a = 0.1 + 0.9 * (trial % 5) / 4.0;
    const auto c = core::deriv_coeffs(n, alpha);
    const kernels::LogPowerSeries s{alpha, a, static_cast<double>(n + 1), c.coeffs};
    std::vector<double> x(257), ref(x.size()), got(x.size());
    for (auto& v : x) v = xx(rng);
    kernels::eval_log_power(Isa::scalar, s, x, ref);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double direct = core::f_deriv(c, a, x[i]);
      CHECK(ref[i] == doctest::Approx(direct).epsilon(1e-12).scale(std::fabs(direct) + 1e-300));
    }
    for (Isa isa : available()) {
      kernels::eval_log_power(isa, s, x, got);
      for (std::size_t i = 0; i < x.size(); ++i) {
        // both sides carry exp(alpha log L - (n+1) log s); the argument's size amplifies its rounding
        const double ls = std::log(x[i] + a);
        const double tol = 1e-13 * (1.0 + std::fabs(alpha * std::log(ls)) + (n + 1) * ls);
        CHECK(std::fabs(got[i] - ref[i]) <= tol * std::fabs(ref[i]) + 1e-300);
      }
    }
  }
}

TEST_CASE("compensated dot: variants agree to rounding") {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> g(0.0, 1.0);
  for (std::size_t n : {1u, 3u, 4u, 17u, 1000u, 4097u}) {
    std::vector<double> w(n), f(n);
    long double exact = 0.0L, mag = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = g(rng) * 1e3;
      f[i] = g(rng);
      exact += static_cast<long double>(w[i]) * f[i];
      mag += std::fabs(static_cast<long double>(w[i]) * f[i]);
    }
    for (Isa isa : available()) {
      const auto r = kernels::dot(isa, w, f);
      CHECK(std::fabs(r.value - static_cast<double>(exact)) <= 1e-15 * static_cast<double>(mag));
      CHECK(r.magnitude == doctest::Approx(static_cast<double>(mag)).epsilon(1e-12));
    }
  }
}

TEST_CASE("compensated dot survives cancellation") {
  // sum of (1e16, 1, -1e16) is exactly 1
  const std::vector<double> w{1e16, 1.0, -1e16, 3.0};
  const std::vector<double> f{1.0, 1.0, 1.0, 0.0};
  for (Isa isa : available()) CHECK(kernels::dot(isa, w, f).value == 1.0);
}

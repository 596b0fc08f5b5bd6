#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <fmt/format.h>

#include "stieltjes/bounds.hpp"
#include "stieltjes/cli.hpp"
#include "stieltjes/contour.hpp"
#include "stieltjes/core.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/special_functions.hpp"

namespace stieltjes::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  return g;
}

// Tracks the worst ratio measured/limit of a family of "x <= limit" assertions.
struct Worst {
  double measured = 0.0;
  double limit = 1.0;
  double ratio = -std::numeric_limits<double>::infinity();
  bool ok = true;
  std::string where;

  void le(double x, double lim, const std::string& at) { update(x, lim, x <= lim, at); }
  void lt(double x, double lim, const std::string& at) { update(x, lim, x < lim, at); }
  void update(double x, double lim, bool pass, const std::string& at) {
    const double r = lim != 0.0 ? x / std::fabs(lim) : x;
    if (!pass && ok) {
      ok = false;
      measured = x;
      limit = lim;
      ratio = r;
      where = at;
    } else if (ok && (r > ratio || std::isnan(r))) {
      measured = x;
      limit = lim;
      ratio = r;
      where = at;
    }
    if (!std::isfinite(x)) ok = false;
  }
  Check check(std::string suite, std::string name) const {
    return {std::move(suite), std::move(name), ok, true, measured, limit, where};
  }
};

ComplexPoint w_of(double t) { return special::lambert_w0({0.0, t}); }

double g_monotone(double t) {
  const auto w = w_of(t);
  return (std::log(w) - 1.0 / w).real();
}

void suite_w0(std::vector<Check>& out) {
  Worst residual, im_lo, im_hi, re_pos, re_log;
  for (double t : log_grid(0.01, 1e4, 200)) {
    const ComplexPoint z{0.0, t};
    const auto w = w_of(t);
    const std::string at = fmt::format("t={:.6g}", t);
    residual.le(std::abs(w * std::exp(w) - z), 1e-13 * std::max(1.0, t), at);
    im_lo.lt(-w.imag(), 0.0, at);
    im_hi.lt(w.imag(), kPi / 2.0, at);
    re_pos.lt(-w.real(), 0.0, at);
    if (t > 1.97) re_log.lt(w.real(), std::log(t), at);
  }
  out.push_back(residual.check("w0", "residual |W e^W - z| <= 1e-13 max(1,|z|)"));
  out.push_back(im_lo.check("w0", "Im W0(it) > 0"));
  out.push_back(im_hi.check("w0", "Im W0(it) < pi/2"));
  out.push_back(re_pos.check("w0", "Re W0(it) > 0"));
  out.push_back(re_log.check("w0", "Re W0(it) < log t for t > 1.97"));
}

void suite_lemma_t(std::vector<Check>& out) {
  Worst roundtrip, tan_pos;
  for (double t : log_grid(0.01, 1e4, 1000)) {
    const double y = special::i_of_t(t);
    const std::string at = fmt::format("t={:.6g}", t);
    roundtrip.le(std::fabs(special::t_of_y(y) - t) / std::max(1.0, t), 1e-12, at);
    tan_pos.lt(-y * std::tan(y), 0.0, at);
  }
  out.push_back(roundtrip.check("lemma_t", "|T(I(t)) - t| / max(1,t) <= 1e-12"));
  out.push_back(tan_pos.check("lemma_t", "I(t) tan I(t) > 0"));
}

void suite_monotone(std::vector<Check>& out) {
  Worst deriv;
  for (double t : log_grid(0.01, 1e4, 1000)) {
    const double h = 1e-4 * t;
    const double d = (g_monotone(t + h) - g_monotone(t - h)) / (2.0 * h);
    deriv.lt(-d, 0.0, fmt::format("t={:.6g}", t));
  }
  out.push_back(deriv.check("monotone", "d/dt Re(log W0(it) - 1/W0(it)) > 0 (central difference)"));
}

void suite_sine(std::vector<Check>& out) {
  Worst half;
  int total = 0, at_least_one = 0;
  double min_alpha_one = std::numeric_limits<double>::infinity();
  for (double alpha : log_grid(kTwoPi, 500.0, 60)) {
    for (int k = 1; k <= 100; ++k) {
      const auto w = special::lambert_w0({0.0, alpha / (kTwoPi * k)});
      const double ks = k * std::sin(w.imag());
      half.le(-ks, -0.5, fmt::format("k={} alpha={:.6g}", k, alpha));
      ++total;
      if (ks >= 1.0) {
        ++at_least_one;
      } else {
        min_alpha_one = std::min(min_alpha_one, alpha);
      }
    }
  }
  out.push_back(half.check("sine", "k sin(Im w_k(alpha)) >= 1/2, k <= 100, alpha in [2pi, 500]"));
  Check info{"sine", "k sin(Im w_k(alpha)) >= 1 (informational)", true, false, static_cast<double>(at_least_one),
             static_cast<double>(total),
             std::isfinite(min_alpha_one) ? fmt::format("fails first at alpha={:.6g}", min_alpha_one) : "holds everywhere"};
  out.push_back(info);
}

void suite_p3(std::vector<Check>& out) {
  Worst bound, margin;
  for (int i = 1; i <= 20; ++i) {
    const double alpha = 0.05 * i;
    const auto r = core::tail_integral(alpha, 1.0, 1, 3);
    const std::string at = fmt::format("alpha={:.2f}", alpha);
    bound.lt(std::fabs(r.value) + r.err, 0.013, at);
    margin.le(std::fabs(r.value) + r.err, 0.95 * 0.013, at);
  }
  out.push_back(bound.check("p3", "|int_1^inf P3 f'''| < 0.013, alpha = 0.05..1.00"));
  out.push_back(margin.check("p3", "5% margin below 0.013"));
}

void suite_contour(std::vector<Check>& out) {
  Worst oracle;
  for (int k : {1, 2, 5}) {
    for (double alpha : {3.0, 7.0, 15.0}) {
      const auto ctx = contour::make_context(k, alpha, 1.0);
      const auto c = contour::s_k_contour(ctx).s_k;
      const auto r = contour::s_k_real_axis(ctx);
      oracle.le(std::abs(c - r) / std::abs(r), 1e-6, fmt::format("k={} alpha={:g}", k, alpha));
    }
  }
  out.push_back(oracle.check("contour", "contour S_k vs real-axis S_k, relative <= 1e-6"));

  {
    const auto ctx = contour::make_context(1, 7.0, 1.0);
    const auto p2 = contour::s_k_real_axis(ctx, 0.0, 2);
    const auto p4 = contour::s_k_real_axis(ctx, 0.0, 4);
    Worst conv;
    conv.le(std::abs(p2 - p4), 1e-9, "k=1 alpha=7");
    out.push_back(conv.check("contour", "real-axis S_k stable under doubled panels"));
  }
  {
    Worst fig1, fig2;
    const auto p1 = contour::build_contour(contour::make_context(1, 200.0, 1.0));
    fig1.le(std::abs(p1.saddle - ComplexPoint(2.46, 1.14)), 0.01, "k=1 alpha=200");
    const auto p40 = contour::build_contour(contour::make_context(40, 200.0, 1.0));
    fig2.le(std::abs(p40.saddle - ComplexPoint(0.29, 0.52)), 0.01, "k=40 alpha=200");
    out.push_back(fig1.check("contour", "w_1(200) near 2.46+1.14i"));
    out.push_back(fig2.check("contour", "w_40(200) near 0.29+0.52i"));
    out.push_back({"contour", "w_40(200) inside the unit circle", p40.saddle_inside, true, std::abs(p40.saddle), 1.0,
                   "k=40 alpha=200"});
  }
  {
    // The L3 length factor assumes the level line stays in [0, 2 log alpha] x [0, pi/2].
    Worst box;
    for (int k : {1, 2, 5, 40}) {
      for (double alpha : {2.0 * kPi, 10.0, 50.0, 200.0}) {
        for (double a : {0.1, 1.0}) {
          const auto p = contour::build_contour(contour::make_context(k, alpha, a));
          box.le(contour::level_line_box_excursion(p), 0.0, fmt::format("k={} alpha={} a={}", k, alpha, a));
        }
      }
    }
    auto c = box.check("contour", "level line inside the L3 box");
    c.hard = false;
    out.push_back(c);
  }
  {
    Worst dec;
    double prev = std::numeric_limits<double>::infinity();
    for (int k : {1, 2, 5}) {
      const double s = std::abs(contour::s_k_contour(contour::make_context(k, 50.0, 1.0)).s_k);
      dec.le(s, prev, fmt::format("k={}", k));
      prev = s;
    }
    out.push_back(dec.check("contour", "|S_1| >= |S_2| >= |S_5| at alpha=50"));
  }
  // P2 integral against its Fourier series (1/pi^2) sum Re S_k / k^2.
  for (double alpha : {1.0, 3.0}) {
    constexpr int K = 200;
    const double direct = contour::p2_integral(alpha, 1.0);
    double recon = 0.0, abs_sum = 0.0, s1 = 0.0, s_last = 0.0;
    for (int k = 1; k <= K; ++k) {
      const auto s = contour::s_k_contour(contour::make_context(k, alpha, 1.0)).s_k;
      recon += s.real() / (static_cast<double>(k) * k);
      abs_sum += std::abs(s) / (static_cast<double>(k) * k);
      if (k == 1) s1 = std::abs(s);
      s_last = std::abs(s);
    }
    recon /= kPi * kPi;
    abs_sum /= kPi * kPi;
    // |S_k| decays like 1/k, so the omitted terms are below |S_K| K sum_{k>K} k^-3 < |S_K| / K
    const double slack = 2.0 * s_last / K / (kPi * kPi) + 1e-12;
    const std::string at = fmt::format("alpha={:g} K={}", alpha, K);
    Worst chain, sixth, fourier;
    chain.le(std::fabs(direct), abs_sum + slack, at);
    sixth.le(std::fabs(direct), s1 / 6.0 + slack, at);
    fourier.le(std::fabs(recon - direct), slack, at);
    out.push_back(chain.check("contour", fmt::format("|P2 integral| <= (1/pi^2) sum |S_k|/k^2, alpha={:g}", alpha)));
    out.push_back(sixth.check("contour", fmt::format("|P2 integral| <= |S_1|/6, alpha={:g}", alpha)));
    out.push_back(fourier.check("contour", fmt::format("Fourier reconstruction of P2 integral, alpha={:g}", alpha)));
  }
}

void suite_sbound(std::vector<Check>& out) {
  Worst l1, l2, l3, l4, sk;
  for (int k : {1, 2, 5, 40}) {
    for (double alpha : {kTwoPi, 10.0, 50.0, 200.0}) {
      for (double a : {0.1, 1.0}) {
        const auto d = contour::s_k_contour(contour::make_context(k, alpha, a));
        const std::string at = fmt::format("k={} alpha={:.6g} a={:g}", k, alpha, a);
        l1.lt(std::abs(d.l1), d.bound_l1, at);
        l2.le(std::abs(d.l2), d.bound_l2, at);
        l3.le(std::abs(d.l3), d.bound_l3, at);
        l4.le(std::abs(d.l4), d.bound_l4, at);
        sk.le(std::abs(d.s_k), d.s_bound, at);
      }
    }
  }
  out.push_back(l1.check("sbound", "|L1| < alpha + 3 + 1/pi"));
  out.push_back(l2.check("sbound", "|L2| <= (alpha^2 + 2 alpha + 2) pi/2"));
  out.push_back(l3.check("sbound", "|L3| <= E (alpha^2 + 2 alpha + 2) sqrt(4 log^2 alpha + pi^2/4)"));
  out.push_back(l4.check("sbound", "|L4| <= alpha^2 + 2 alpha + 2"));
  out.push_back(sk.check("sbound", "|S_k| <= aggregate bound"));
}

void suite_theorem(std::vector<Check>& out) {
  Worst dominance;
  int skipped = 0;
  for (double alpha = kTwoPi; alpha <= 60.0 + 1e-9; alpha += 0.5) {
    const auto r = core::c_alpha(alpha, 1.0);
    const double mag = std::fabs(r.c_value);
    if (!(r.err_bound < 0.01 * mag)) {
      ++skipped;
      continue;
    }
    dominance.le(std::log10(mag + r.err_bound), bounds::theorem_bound(alpha).log10_value, fmt::format("alpha={:.6g}", alpha));
  }
  auto c = dominance.check("theorem", "|C_alpha(1)| <= theorem bound, alpha in [2pi, 60] step 0.5 (log10)");
  if (skipped > 0) c.detail += fmt::format("; {} points skipped (err_bound >= 1%)", skipped);
  out.push_back(c);

  Worst order, remark, finite;
  for (double alpha : log_grid(kTwoPi, 1e3, 400)) {
    const std::string at = fmt::format("alpha={:.6g}", alpha);
    order.le(bounds::conjecture_bound(alpha).log10_value, bounds::theorem_bound(alpha).log10_value, at);
    if (alpha / kTwoPi > 1.97) remark.le(bounds::saddle_exponent(alpha), alpha * std::log(std::log(alpha)), at);
  }
  {
    const double s = 0.75 * kTwoPi * kTwoPi * std::log(kTwoPi);
    order.lt(-s, -2.0, "(3/4) alpha^2 log alpha > 2 at alpha = 2pi");
  }
  for (double alpha : log_grid(0.5, 1e4, 200)) {
    for (auto f : bounds::kAllFamilies) {
      const auto b = bounds::evaluate(f, std::round(alpha), 1.0);
      if (b.valid) finite.le(std::isfinite(b.log10_value) ? 0.0 : 1.0, 0.0, fmt::format("alpha={:g}", std::round(alpha)));
    }
  }
  out.push_back(order.check("theorem", "conjecture <= theorem on [2pi, 1e3]"));
  out.push_back(remark.check("theorem", "alpha Re(log w - 1/w) <= alpha log log alpha for alpha/2pi > 1.97"));
  out.push_back(finite.check("theorem", "every valid family finite in log10 up to alpha = 1e4"));

  Worst integer_dom;
  for (int m : {6, 10, 20}) {
    const auto row = bounds::bound_row(m, 1.0);
    for (const auto& b : row.bounds) {
      if (b.valid && row.measured_log10) {
        integer_dom.le(*row.measured_log10, b.log10_value,
                       fmt::format("m={} {}", m, bounds::family_name(b.family)));
      }
    }
  }
  out.push_back(integer_dom.check("theorem", "every valid family >= measured |gamma_m|, m in {6, 10, 20}"));

  Worst ordering;
  const auto row = bounds::bound_row(50.0, 1.0);
  const double conj = row.bounds[static_cast<int>(bounds::Family::conjecture)].log10_value;
  const double thm = row.bounds[static_cast<int>(bounds::Family::theorem)].log10_value;
  ordering.le(row.measured_log10.value_or(std::numeric_limits<double>::infinity()), conj, "measured vs conjecture");
  ordering.le(conj, thm, "conjecture vs theorem");
  out.push_back(ordering.check("theorem", "alpha=50: measured <= conjecture <= theorem"));
}

}  // namespace

std::vector<Check> run_suite(std::string_view name) {
  std::vector<Check> out;
  auto one = [&](std::string_view s) {
    if (s == "w0") {
      suite_w0(out);
    } else if (s == "lemma_t") {
      suite_lemma_t(out);
    } else if (s == "sine") {
      suite_sine(out);
    } else if (s == "monotone") {
      suite_monotone(out);
    } else if (s == "p3") {
      suite_p3(out);
    } else if (s == "contour") {
      suite_contour(out);
    } else if (s == "sbound") {
      suite_sbound(out);
    } else if (s == "theorem") {
      suite_theorem(out);
    } else {
      throw ConfigError("--suite must be one of w0, lemma_t, sine, monotone, p3, contour, sbound, theorem, all");
    }
  };
  if (name == "all") {
    for (auto s : kSuites) one(s);
  } else {
    one(name);
  }
  return out;
}

}  // namespace stieltjes::cli

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "stieltjes/contour.hpp"
#include "stieltjes/core.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/kernels.hpp"
#include "stieltjes/quadrature.hpp"

namespace stieltjes::contour {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr ComplexPoint kI{0.0, 1.0};

// e^{-v y} sum_j c_j y^{-j}
struct Amplitude {
  int v;
  std::vector<double> c;
  ComplexPoint operator()(ComplexPoint y) const {
    const ComplexPoint inv = 1.0 / y;
    ComplexPoint acc = c[v];
    for (int j = v - 1; j >= 0; --j) acc = acc * inv + c[j];
    return std::exp(-static_cast<double>(v) * y) * acc;
  }
};

using CQuad = numerics::QuadResult<std::complex<double>>;

CQuad integrate_oriented(auto&& f, double from, double to, const numerics::QuadOptions& opt, const std::string& tag) {
  if (from <= to) return numerics::integrate_gk15<std::complex<double>>(f, from, to, opt, tag);
  auto r = numerics::integrate_gk15<std::complex<double>>(f, to, from, opt, tag);
  r.value = -r.value;
  return r;
}

}  // namespace

SegmentIntegrals integrate_contour(const ContourPath& path, int v, double rel_tol) {
  const auto& ctx = path.ctx;
  const Amplitude amp{v, core::deriv_coeffs(v, ctx.alpha).coeffs};
  numerics::QuadOptions opt;
  opt.rel_tol = rel_tol;
  opt.max_intervals = 4000;
  SegmentIntegrals out;
  // On the real axis and the arc |Im h| reaches about 2 pi k e, and exp(h) inherits that many ulps.
  numerics::QuadOptions osc = opt;
  osc.noise = 50.0 * (1.0 + kTwoPi * ctx.k * std::numbers::e + ctx.alpha);

  {
    auto f = [&](double t) {
      const ComplexPoint y{t, 0.0};
      return std::exp(h(ctx, y)) * amp(y);
    };
    const auto r = integrate_oriented(f, ctx.b, 1.0, osc, "real_axis");
    out.values[0] = r.value;
    out.errors[0] = r.error;
  }
  {
    auto f = [&](double theta) {
      const ComplexPoint y = std::polar(1.0, theta);
      return std::exp(h(ctx, y)) * amp(y) * kI * y;
    };
    const auto r = integrate_oriented(f, 0.0, path.theta_u, osc, "unit_arc");
    out.values[1] = r.value;
    out.errors[1] = r.error;
  }
  const ComplexPoint e_hw = std::exp(h(ctx, path.saddle));
  for (int idx = 2; idx < 4; ++idx) {
    const auto& seg = path.segments[idx];
    const std::string tag(segment_name(seg.kind));
    for (const auto& piece : seg.pieces) {
      const DescentHalf& half = piece.half == 0 ? *path.origin_half : *path.infinity_half;
      auto f = [&](double s) {
        const auto [y, dy] = half.point(s);
        return std::exp(-s * s) * amp(y) * dy;
      };
      const auto r = integrate_oriented(f, piece.s_begin, piece.s_end, opt, tag);
      out.values[idx] += e_hw * r.value;
      out.errors[idx] += std::abs(e_hw) * r.error;
    }
  }
  // Beyond the traced end of the infinity half: Gaussian tail in s.
  const auto& last = path.segments[3];
  if (!last.pieces.empty()) {
    const auto& piece = last.pieces.back();
    const DescentHalf& half = piece.half == 0 ? *path.origin_half : *path.infinity_half;
    const double s_end = piece.s_end;
    const auto [y, dy] = half.point(s_end);
    if (s_end > 0.0) out.errors[3] += std::abs(e_hw) * std::exp(-s_end * s_end) * std::abs(amp(y) * dy) / s_end;
  }
  return out;
}

SkDecomposition s_k_contour(const PhaseContext& ctx) { return s_k_contour(build_contour(ctx)); }

SkDecomposition s_k_contour(const ContourPath& path) {
  const auto seg = integrate_contour(path, 2);
  SkDecomposition d;
  d.l1 = seg.values[0];
  d.l2 = seg.values[1];
  d.l3 = seg.values[2];
  d.l4 = seg.values[3];
  d.s_k = seg.total();
  d.quad_err = seg.error();
  const double al = path.ctx.alpha;
  const double poly = al * al + 2.0 * al + 2.0;
  const ComplexPoint w = path.saddle;
  const double e = std::exp((-al / w + al * std::log(w)).real());
  const double len = std::sqrt(4.0 * std::log(al) * std::log(al) + kPi * kPi / 4.0);
  d.bound_l1 = al + 3.0 + 1.0 / kPi;
  d.bound_l2 = poly * kPi / 2.0;
  d.bound_l3 = e * poly * len;
  d.bound_l4 = poly;
  d.s_bound = d.bound_l1 + poly * (1.0 + kPi / 2.0 + e * len);
  return d;
}

RealAxisResult s_k_real_axis_detailed(const PhaseContext& ctx, double x_max, int panels_per_period, int v) {
  if (panels_per_period < 1) throw ConfigError("s_k_real_axis: panels_per_period must be >= 1");
  if (v < 0 || v >= core::kMaxDerivOrder) throw ConfigError("s_k_real_axis: v must be in [0, 59]");
  const double omega = kTwoPi * ctx.k;
  const bool automatic = !(x_max > 0.0);
  const double cut = automatic ? std::max(4.0, 2.0 * (ctx.alpha + v + 20.0) / omega) : x_max;
  if (cut <= 1.0) throw ConfigError("s_k_real_axis: x_max must exceed 1");
  const auto c = core::deriv_coeffs(v, ctx.alpha);
  const kernels::LogPowerSeries series{ctx.alpha, ctx.a, static_cast<double>(v + 1), c.coeffs};

  // Panel edges: at most 1/(kP) long and at most half the distance to the branch point x = 1 - a.
  std::vector<double> edges{1.0};
  const double x_sing = 1.0 - ctx.a;
  while (edges.back() < cut) {
    const double x = edges.back();
    const double len = std::min(1.0 / (ctx.k * panels_per_period), 0.5 * (x - x_sing));
    edges.push_back(std::min(cut, x + len));
  }

  auto panel_sum = [&](int order) {
    const auto& rule = numerics::gauss_legendre(order);
    const std::size_t q = rule.nodes.size();
    const std::size_t panels = edges.size() - 1;
    std::vector<double> xs(panels * q), fs(xs.size()), wr(xs.size()), wi(xs.size());
    for (std::size_t p = 0; p < panels; ++p) {
      const double lo = edges[p], len = edges[p + 1] - edges[p];
      for (std::size_t j = 0; j < q; ++j) {
        const double x = lo + len * rule.nodes[j];
        xs[p * q + j] = x;
        // e^{2 pi i k x} through the fractional part of k x
        const double kx = ctx.k * x;
        const double phase = kTwoPi * (kx - std::floor(kx));
        wr[p * q + j] = len * rule.weights[j] * std::cos(phase);
        wi[p * q + j] = len * rule.weights[j] * std::sin(phase);
      }
    }
    kernels::eval_log_power(series, xs, fs);
    const auto re = kernels::dot(wr, fs);
    const auto im = kernels::dot(wi, fs);
    return std::pair{std::complex<double>(re.value, im.value), re.magnitude + im.magnitude};
  };
  const auto [coarse, mag_c] = panel_sum(16);
  const auto [fine, mag] = panel_sum(24);
  (void)mag_c;

  // Tail: sum_j (-1)^{j+1} e^{i omega X} f^(v+j)(X) / (i omega)^{j+1}, truncated at the best envelope.
  const ComplexPoint e_x = std::polar(1.0, kTwoPi * (ctx.k * cut - std::floor(ctx.k * cut)));
  const int j_max = core::kMaxDerivOrder - v;
  std::vector<double> bounds;
  std::vector<ComplexPoint> terms;
  ComplexPoint iw_pow = kI * omega;
  for (int j = 0; j <= j_max; ++j) {
    const auto cj = core::deriv_coeffs(v + j, ctx.alpha);
    // remainder after j terms: omega^{-j} * integral of |f^(v+j)| over [X, inf)
    // f itself is not absolutely integrable, so at least one term is always taken when v = 0
    bounds.push_back(v + j == 0 ? std::numeric_limits<double>::infinity()
                                : std::exp(core::log_envelope_integral(cj, ctx.a, cut, v + j) - j * std::log(omega)));
    if (j < j_max) {
      terms.push_back((j % 2 == 0 ? -1.0 : 1.0) * e_x * core::f_deriv(cj, ctx.a, cut) / iw_pow);
      iw_pow *= kI * omega;
    }
  }
  const auto best = std::min_element(bounds.begin(), bounds.end()) - bounds.begin();
  numerics::CompensatedSum<std::complex<double>> tail;
  for (int j = 0; j < best; ++j) tail.add(terms[j]);

  RealAxisResult out;
  out.value = fine + tail.value();
  out.x_max = cut;
  const double tail_err = bounds[best];
  out.err = std::abs(fine - coarse) + tail_err + 64.0 * std::numeric_limits<double>::epsilon() * (mag + tail.magnitude());
  if (!automatic && tail_err > 1e-10 * std::max(1.0, std::abs(out.value))) {
    throw TailCutError("s_k_real_axis: tail envelope beyond x_max exceeds 1e-10", cut, tail_err);
  }
  return out;
}

std::complex<double> s_k_real_axis(const PhaseContext& ctx, double x_max, int panels_per_period) {
  return s_k_real_axis_detailed(ctx, x_max, panels_per_period, 2).value;
}

double p2_integral(double alpha, double a) {
  if (!(alpha >= 1.0)) throw DomainError("p2_integral: alpha must be >= 1");
  return core::tail_integral(alpha, a, 1, 2).value;
}

FourierRemainder fourier_remainder(double alpha, double a, int v, double rel_tol, int max_terms) {
  if (v < 2 || v % 2 != 0 || v > core::kMaxDerivOrder) throw ConfigError("fourier_remainder: v must be even in [2, 60]");
  if (max_terms < 1) throw ConfigError("fourier_remainder: max_terms must be >= 1");
  // B_v({x}) = (-1)^{v/2+1} 2 v! / (2 pi)^v sum_k cos(2 pi k x) / k^v, and the remainder carries -1/v!.
  const double coef = ((v / 2) % 2 == 0 ? 1.0 : -1.0) * 2.0 * std::exp(-v * std::log(kTwoPi));
  numerics::CompensatedSum<double> sum;
  double err = 0.0;
  double tail_est = 0.0;
  int k = 1;
  for (; k <= max_terms; ++k) {
    const auto path = build_contour(make_context(k, alpha, a));
    const auto seg = integrate_contour(path, v, 1e-11);
    const double kv = std::exp(-v * std::log(static_cast<double>(k)));
    const auto s = seg.total();
    sum.add(s.real() * kv);
    err += seg.error() * kv;
    tail_est = std::abs(s) * kv * k / (v - 1);
    if (k >= 3 && tail_est <= rel_tol * std::fabs(sum.value())) break;
  }
  FourierRemainder out;
  out.value = coef * sum.value();
  out.err = std::fabs(coef) * (err + tail_est + 16.0 * std::numeric_limits<double>::epsilon() * sum.magnitude());
  out.terms = std::min(k, max_terms);
  return out;
}

}  // namespace stieltjes::contour

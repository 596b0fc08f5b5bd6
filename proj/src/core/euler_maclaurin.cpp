#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "stieltjes/bernoulli.hpp"
#include "stieltjes/contour.hpp"
#include "stieltjes/core.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/kernels.hpp"
#include "stieltjes/quadrature.hpp"

namespace stieltjes::core {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_alpha_a(double alpha, double a) {
  if (!std::isfinite(alpha) || alpha < 0.0) throw DomainError("alpha must be finite and >= 0");
  if (!std::isfinite(a) || a <= 0.0 || a > 1.0) throw DomainError("a must lie in (0, 1]");
}

// Relative error scale of one evaluation of the log-power representation.
double eval_condition(double alpha, int n, double s) {
  const double log_s = std::log(s);
  return alpha * std::fabs(std::log(log_s)) + (n + 1) * log_s + 2.0 * n + 8.0;
}

struct Interval {
  double lo;
  double hi;
  int depth;
};

struct QuadratureSum {
  double value = 0.0;
  double err = 0.0;
  double rounding = 0.0;
};

// Integral of B_v({x}) f^(v)(x) over [m, M], unit periods refined adaptively.
QuadratureSum periodic_quadrature(const DerivCoeffs& c, double a, int m, int cut, int order, double tol) {
  QuadratureSum out;
  if (cut <= m) return out;
  const auto& table = special::BernoulliTable::shared();
  const auto& rule = numerics::gauss_legendre(order);
  const int v = c.n;
  std::vector<double> abs_coeffs(c.coeffs.size());
  std::transform(c.coeffs.begin(), c.coeffs.end(), abs_coeffs.begin(), [](double x) { return std::fabs(x); });
  const kernels::LogPowerSeries series{c.alpha, a, static_cast<double>(v + 1), c.coeffs};
  const kernels::LogPowerSeries envelope{c.alpha, a, static_cast<double>(v + 1), abs_coeffs};
  const double kappa = std::max(eval_condition(c.alpha, v, m + a), eval_condition(c.alpha, v, cut + a));
  const double span = cut - m;

  std::vector<Interval> pending;
  for (int n = m; n < cut; ++n) pending.push_back({static_cast<double>(n), static_cast<double>(n + 1), 0});

  numerics::CompensatedSum<double> total;
  std::vector<double> xs, fs, es, ws;
  while (!pending.empty()) {
    const std::size_t q = rule.nodes.size();
    xs.resize(pending.size() * 3 * q);
    ws.resize(xs.size());
    // whole interval, left half, right half
    for (std::size_t i = 0; i < pending.size(); ++i) {
      const auto& iv = pending[i];
      const double base = std::floor(iv.lo);
      const double len = iv.hi - iv.lo;
      const double starts[3] = {iv.lo, iv.lo, iv.lo + 0.5 * len};
      const double lens[3] = {len, 0.5 * len, 0.5 * len};
      for (int r = 0; r < 3; ++r) {
        for (std::size_t j = 0; j < q; ++j) {
          const std::size_t idx = (i * 3 + r) * q + j;
          const double frac = (starts[r] - base) + lens[r] * rule.nodes[j];
          xs[idx] = base + frac;
          ws[idx] = lens[r] * rule.weights[j] * table.polynomial(v, frac);
        }
      }
    }
    fs.resize(xs.size());
    es.resize(xs.size());
    kernels::eval_log_power(series, xs, fs);
    kernels::eval_log_power(envelope, xs, es);

    std::vector<Interval> next;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      const auto& iv = pending[i];
      auto sub = [&](int r) {
        const std::size_t off = (i * 3 + r) * q;
        return kernels::dot(std::span(ws).subspan(off, q), std::span(fs).subspan(off, q));
      };
      const auto whole = sub(0);
      const auto left = sub(1);
      const auto right = sub(2);
      double env_mag = 0.0;
      for (std::size_t j = (i * 3 + 1) * q; j < (i * 3 + 3) * q; ++j) env_mag += std::fabs(ws[j]) * es[j];
      const double est = std::fabs(whole.value - left.value - right.value);
      const double len = iv.hi - iv.lo;
      const double local_tol = std::max(0.01 * tol * len / span, 4.0 * kEps * kappa * env_mag);
      if (est <= local_tol || iv.depth >= 30) {
        if (est > local_tol) {
          throw QuadratureError("real_axis", "periodic quadrature did not converge near x = " + std::to_string(iv.lo));
        }
        total.add(left.value);
        total.add(right.value);
        out.err += est;
        out.rounding += kEps * kappa * env_mag;
      } else {
        const double mid = 0.5 * (iv.lo + iv.hi);
        next.push_back({iv.lo, mid, iv.depth + 1});
        next.push_back({mid, iv.hi, iv.depth + 1});
      }
    }
    pending = std::move(next);
  }
  out.value = total.value();
  return out;
}

struct AsymptoticTail {
  double value = 0.0;
  double err = 0.0;
};

// Integral of B_v({x}) f^(v) over [M, inf) by repeated integration by parts,
// stopped at the order with the smallest remainder envelope.
AsymptoticTail asymptotic_tail(double alpha, double a, int v, int cut) {
  const auto& table = special::BernoulliTable::shared();
  const int vmax = special::BernoulliTable::kMaxIndex;
  std::vector<double> terms;
  std::vector<double> bounds;
  long double fac = 1.0L;
  for (int order = v; order <= vmax; ++order) {
    const auto c = deriv_coeffs(order, alpha);
    const double log_env = log_envelope_integral(c, a, cut, order);
    bounds.push_back(static_cast<double>(std::fabs(fac)) * table.sup_abs_periodic(order) * std::exp(log_env));
    if (order < vmax) {
      const double b_next = table.value(order + 1);
      terms.push_back(b_next == 0.0 ? 0.0
                                    : static_cast<double>(fac) * (-b_next / (order + 1)) * f_deriv(c, a, cut));
    }
    fac = -fac / (order + 1);
  }
  const auto best = std::min_element(bounds.begin(), bounds.end()) - bounds.begin();
  AsymptoticTail out;
  numerics::CompensatedSum<double> sum;
  for (int i = 0; i < best; ++i) sum.add(terms[i]);
  out.value = sum.value();
  out.err = bounds[best] + 4.0 * kEps * sum.magnitude() * eval_condition(alpha, vmax, cut + a);
  return out;
}

struct Head {
  double value = 0.0;
  double rounding = 0.0;
};

// Everything in the Euler-Maclaurin expression except the remainder integral.
Head em_head(double alpha, double a, int m, int v) {
  std::vector<double> xs(m), fs(m);
  for (int r = 0; r < m; ++r) xs[r] = r + 1.0;
  const std::vector<double> one{1.0};
  kernels::eval_log_power({alpha, a, 1.0, one}, xs, fs);
  numerics::CompensatedSum<double> sum;
  for (double f : fs) sum.add(f);
  double rounding = kEps * sum.magnitude() * eval_condition(alpha, 0, m + a);

  const double log_m = std::log(m + a);
  const double integral = std::exp((alpha + 1.0) * std::log(log_m)) / (alpha + 1.0);
  rounding += kEps * integral * ((alpha + 1.0) * std::fabs(std::log(log_m)) + 4.0);
  sum.add(-integral);
  sum.add(-0.5 * fs.back());

  const auto& table = special::BernoulliTable::shared();
  long double fact = 1.0L;
  for (int j = 1; j <= v / 2; ++j) {
    fact *= (2 * j - 1) * (2 * j);
    const double coef = static_cast<double>(table.value_ld(2 * j) / fact);
    const double term = coef * f_deriv(2 * j - 1, alpha, a, m);
    rounding += kEps * std::fabs(term) * eval_condition(alpha, 2 * j - 1, m + a);
    sum.add(-term);
  }
  rounding += 4.0 * kEps * sum.magnitude();
  return {sum.value(), rounding};
}

long double factorial(int n) {
  long double f = 1.0L;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

StieltjesResult real_axis_route(double alpha, double a, const EmConfig& cfg) {
  const auto head = em_head(alpha, a, cfg.m, cfg.v);
  const auto tail = tail_integral(alpha, a, cfg.m, cfg.v, cfg);
  const double scale = static_cast<double>(1.0L / factorial(cfg.v));
  const double sign = cfg.v % 2 == 1 ? 1.0 : -1.0;
  StieltjesResult r;
  r.c_value = head.value + sign * scale * tail.value;
  r.err_bound = head.rounding + scale * tail.err;
  r.config_used = cfg;
  r.config_used.tail_cut = tail.cut;
  r.method_used = EmMethod::real_axis;
  return r;
}

StieltjesResult contour_route(double alpha, double a, const EmConfig& cfg) {
  EmConfig used = cfg;
  used.m = 1;
  const auto head = em_head(alpha, a, 1, used.v);
  const auto rem = contour::fourier_remainder(alpha, a, used.v, 1e-12, used.max_fourier_terms);
  StieltjesResult r;
  r.c_value = head.value + rem.value;
  r.err_bound = head.rounding + rem.err;
  r.config_used = used;
  r.method_used = EmMethod::contour;
  r.fourier_terms = rem.terms;
  return r;
}

}  // namespace

std::string_view method_name(EmMethod m) {
  switch (m) {
    case EmMethod::automatic:
      return "auto";
    case EmMethod::real_axis:
      return "real_axis";
    case EmMethod::contour:
      return "contour";
  }
  return "unknown";
}

void EmConfig::validate() const {
  if (m < 1) throw ConfigError("EmConfig: m must be >= 1");
  if (v < 2 || v > kMaxDerivOrder || v % 2 != 0) throw ConfigError("EmConfig: v must be even and in [2, 60]");
  if (tail_cut != 0.0 && !(tail_cut >= m)) throw ConfigError("EmConfig: tail_cut must be >= m");
  if (quad_order < 2 || quad_order > 128) throw ConfigError("EmConfig: quad_order must be in [2, 128]");
  if (!(tol > 0.0)) throw ConfigError("EmConfig: tol must be > 0");
  if (max_fourier_terms < 1) throw ConfigError("EmConfig: max_fourier_terms must be >= 1");
}

TailIntegral tail_integral(double alpha, double a, int m, int v, const EmConfig& cfg) {
  check_alpha_a(alpha, a);
  if (m < 1) throw ConfigError("tail_integral: m must be >= 1");
  if (v < 1 || v > kMaxDerivOrder) throw ConfigError("tail_integral: v must be in [1, 60]");
  if (cfg.quad_order < 2 || cfg.quad_order > 128) throw ConfigError("tail_integral: quad_order must be in [2, 128]");
  if (!(cfg.tol > 0.0)) throw ConfigError("tail_integral: tol must be > 0");
  const auto c = deriv_coeffs(v, alpha);
  const bool user_cut = cfg.tail_cut > 0.0;
  int cut = user_cut ? static_cast<int>(std::ceil(cfg.tail_cut)) : std::max(m, static_cast<int>(std::ceil(alpha)) + 20);
  if (cut < m) throw ConfigError("tail_integral: tail_cut must be >= m");
  // rounding level the quadrature over [m, M] cannot get below; pushing M further buys nothing
  const double floor = kEps * eval_condition(alpha, v, m + a) *
                       special::BernoulliTable::shared().sup_abs_periodic(v) *
                       std::exp(log_envelope_integral(c, a, m, v));
  for (;;) {
    const auto tail = asymptotic_tail(alpha, a, v, cut);
    const bool small = tail.err <= std::max({0.01 * cfg.tol, 16.0 * kEps * std::fabs(tail.value), 0.01 * floor});
    if (!small && user_cut && tail.err > cfg.tol) {
      throw TailCutError("tail_integral: envelope beyond the cut exceeds tol; raise tail_cut", cut, tail.err);
    }
    if (small || user_cut || cut > (1 << 20)) {
      const auto quad = periodic_quadrature(c, a, m, cut, cfg.quad_order, cfg.tol);
      TailIntegral out;
      out.value = quad.value + tail.value;
      out.quadrature_err = quad.err;
      out.tail_err = tail.err;
      out.rounding_err = quad.rounding;
      out.err = quad.err + tail.err + quad.rounding;
      out.cut = cut;
      return out;
    }
    cut *= 2;
  }
}

namespace {

StieltjesResult compute(double alpha, double a, const EmConfig& cfg) {
  switch (cfg.method) {
    case EmMethod::real_axis:
      return real_axis_route(alpha, a, cfg);
    case EmMethod::contour:
      if (alpha < 1.0) throw DomainError("contour route needs alpha >= 1");
      return contour_route(alpha, a, cfg);
    case EmMethod::automatic:
      break;
  }
  auto best = real_axis_route(alpha, a, cfg);
  if (alpha >= 1.0 && best.err_bound > std::max(cfg.tol, 1e-8 * std::fabs(best.c_value))) {
    try {
      auto alt = contour_route(alpha, a, cfg);
      if (alt.err_bound < best.err_bound) best = alt;
    } catch (const NumericalError&) {
      // keep the real-axis value and its (large) error bound
    }
  }
  return best;
}

// log^alpha(a)/a on the principal branch, with 0^0 = 1.
std::complex<double> gamma_shift(double alpha, double a) {
  const double log_a = std::log(a);
  if (alpha == 0.0) return 1.0 / a;
  if (log_a == 0.0) return 0.0;
  if (alpha == std::floor(alpha)) return std::pow(log_a, alpha) / a;
  return std::exp(alpha * std::log(std::complex<double>(log_a, 0.0))) / a;
}

}  // namespace

StieltjesResult c_alpha(double alpha, double a, const EmConfig& cfg) {
  check_alpha_a(alpha, a);
  cfg.validate();
  auto r = compute(alpha, a, cfg);
  const auto shift = gamma_shift(alpha, a);
  r.gamma_value = r.c_value + shift;
  return r;
}

StieltjesResult gamma_alpha(double alpha, double a, const EmConfig& cfg) { return c_alpha(alpha, a, cfg); }

}  // namespace stieltjes::core

#pragma once

#include <cmath>
#include <cstdio>
#include <complex>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "stieltjes/errors.hpp"

namespace stieltjes::numerics {

/// Gauss-Legendre rule mapped to [0, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached per order; orders 1..128.
const GaussRule& gauss_legendre(int order);

/// Neumaier summation; also tracks sum of |terms| for rounding estimates.
template <class T>
class CompensatedSum {
 public:
  void add(T x) {
    add_part(sum_, comp_, x);
    magnitude_ += std::abs(x);
  }
  T value() const { return sum_ + comp_; }
  double magnitude() const { return magnitude_; }

 private:
  static void add_part(double& s, double& c, double x) {
    const double t = s + x;
    c += std::fabs(s) >= std::fabs(x) ? (s - t) + x : (x - t) + s;
    s = t;
  }
  static void add_part(std::complex<double>& s, std::complex<double>& c, std::complex<double> x) {
    double sr = s.real(), si = s.imag(), cr = c.real(), ci = c.imag();
    add_part(sr, cr, x.real());
    add_part(si, ci, x.imag());
    s = {sr, si};
    c = {cr, ci};
  }

  T sum_{};
  T comp_{};
  double magnitude_ = 0.0;
};

template <class T>
struct QuadResult {
  T value{};
  double error = 0.0;
  double magnitude = 0.0;  // integral of |f|
  int evaluations = 0;
};

struct QuadOptions {
  double abs_tol = 0.0;
  double rel_tol = 1e-10;
  int max_intervals = 2000;
  /// Rounding floor as a multiple of eps times the integral of |f|. Oscillatory
  /// integrands with a large phase need more than the default.
  double noise = 50.0;
};

namespace detail {

struct Gk15 {
  static constexpr double xk[8] = {
      0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
      0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
      0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
  static constexpr double wk[8] = {
      0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
      0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
      0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
  static constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                   0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
};

template <class T>
struct Panel {
  double lo, hi;
  T value;
  double error;
  double magnitude;
  bool operator<(const Panel& o) const { return error < o.error; }
};

inline std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

template <class T, class F>
Panel<T> gk15_panel(F& f, double lo, double hi) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const T fc = f(c);
  T kron = fc * Gk15::wk[7];
  T gauss = fc * Gk15::wg[3];
  double mag = std::abs(fc) * Gk15::wk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * Gk15::xk[j];
    const T f1 = f(c - dx);
    const T f2 = f(c + dx);
    kron += (f1 + f2) * Gk15::wk[j];
    mag += (std::abs(f1) + std::abs(f2)) * Gk15::wk[j];
    if (j % 2 == 1) gauss += (f1 + f2) * Gk15::wg[j / 2];
  }
  const double ah = std::fabs(h);
  return {lo, hi, kron * h, std::abs((kron - gauss) * h), mag * ah};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) quadrature of a real- or complex-valued
/// integrand. Accepts when the summed error estimate drops below
/// max(abs_tol, rel_tol |I|, rounding floor). Throws QuadratureError tagged with
/// `segment` when the interval budget runs out.
template <class T, class F>
QuadResult<T> integrate_gk15(F&& f, double lo, double hi, const QuadOptions& opt, const std::string& segment) {
  QuadResult<T> out;
  if (lo == hi) return out;
  std::priority_queue<detail::Panel<T>> work;
  auto first = detail::gk15_panel<T>(f, lo, hi);
  T total = first.value;
  double err = first.error;
  double mag = first.magnitude;
  work.push(first);
  int intervals = 1;
  int evals = 15;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  auto target = [&] { return std::max({opt.abs_tol, opt.rel_tol * std::abs(total), opt.noise * kEps * mag}); };
  while (err > target()) {
    if (intervals >= opt.max_intervals) {
      throw QuadratureError(segment, "adaptive quadrature did not converge (error estimate " + detail::sci(err) +
                                         ", target " + detail::sci(target()) + ")");
    }
    // The worst panel is already at its own rounding level; bisecting cannot lower the estimate.
    if (work.top().error <= opt.noise * kEps * work.top().magnitude) break;
    auto p = work.top();
    work.pop();
    const double mid = 0.5 * (p.lo + p.hi);
    if (mid == p.lo || mid == p.hi) {
      throw QuadratureError(segment, "interval underflow during adaptive refinement");
    }
    auto left = detail::gk15_panel<T>(f, p.lo, mid);
    auto right = detail::gk15_panel<T>(f, mid, p.hi);
    evals += 30;
    ++intervals;
    total += left.value + right.value - p.value;
    err += left.error + right.error - p.error;
    mag += left.magnitude + right.magnitude - p.magnitude;
    work.push(left);
    work.push(right);
  }
  // Re-sum from the leaves to shed drift from the incremental updates.
  CompensatedSum<T> sum;
  double err_sum = 0.0;
  double mag_sum = 0.0;
  while (!work.empty()) {
    sum.add(work.top().value);
    err_sum += work.top().error;
    mag_sum += work.top().magnitude;
    work.pop();
  }
  out.value = sum.value();
  out.error = err_sum + 50.0 * kEps * mag_sum;
  out.magnitude = mag_sum;
  out.evaluations = evals;
  return out;
}

}  // namespace stieltjes::numerics

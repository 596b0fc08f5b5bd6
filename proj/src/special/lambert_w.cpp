#include "stieltjes/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "stieltjes/errors.hpp"

namespace stieltjes::special {

namespace {

using Wide = std::complex<long double>;

constexpr int kMaxIterations = 50;

Wide initial_guess(Wide z) {
  const long double inv_e = 1.0L / std::numbers::e_v<long double>;
  if (std::abs(z) >= inv_e) return std::log(1.0L + z);
  return z - z * z;
}

// W0 = -1 + p - p^2/3 + 11/72 p^3 - ... with p = sqrt(2(e z + 1)).
Wide branch_series(Wide p) {
  static constexpr long double kC[] = {-1.0L, 1.0L, -1.0L / 3, 11.0L / 72, -43.0L / 540, 769.0L / 17280,
                                       -221.0L / 8505, 680863.0L / 43545600};
  Wide acc = kC[7];
  for (int i = 6; i >= 0; --i) acc = acc * p + kC[i];
  return acc;
}

}  // namespace

ComplexPoint lambert_w0(ComplexPoint z_in) {
  if (!std::isfinite(z_in.real()) || !std::isfinite(z_in.imag())) {
    throw DomainError("lambert_w0: non-finite argument");
  }
  const double inv_e = 1.0 / std::numbers::e;
  if (z_in.imag() == 0.0 && z_in.real() < -inv_e) {
    throw DomainError("lambert_w0: argument on the branch cut (-inf, -1/e)");
  }
  if (z_in == ComplexPoint(0.0, 0.0)) return {0.0, 0.0};

  const Wide z(z_in.real(), z_in.imag());
  // Halley loses its quadratic rate next to the branch point; the series is exact enough there.
  const Wide near = std::numbers::e_v<long double> * z + 1.0L;
  if (std::abs(near) < 1e-4L) {
    const Wide w = branch_series(std::sqrt(2.0L * near));
    return {static_cast<double>(w.real()), static_cast<double>(w.imag())};
  }
  Wide w = std::abs(near) < 0.3L ? branch_series(std::sqrt(2.0L * near)) : initial_guess(z);
  const long double scale = std::max(1.0L, std::abs(z));
  const long double step_tol = 1e-17L;

  for (int it = 0; it < kMaxIterations; ++it) {
    const Wide ew = std::exp(w);
    const Wide f = w * ew - z;
    const Wide wp1 = w + 1.0L;
    // Halley: dw = f / (e^w (w+1) - (w+2) f / (2 (w+1)))
    Wide denom = ew * wp1 - (wp1 + 1.0L) * f / (2.0L * wp1);
    if (std::abs(denom) == 0.0L) denom = ew * wp1;
    const Wide dw = f / denom;
    w -= dw;
    if (std::abs(dw) <= step_tol * std::max(1.0L, std::abs(w))) {
      const ComplexPoint out(static_cast<double>(w.real()), static_cast<double>(w.imag()));
      const Wide check(out.real(), out.imag());
      const long double residual = std::abs(check * std::exp(check) - z);
      if (residual <= 1e-13L * scale) return out;
    }
  }
  const ComplexPoint last(static_cast<double>(w.real()), static_cast<double>(w.imag()));
  const double residual = static_cast<double>(std::abs(w * std::exp(w) - z));
  throw LambertNonConvergence(z_in, last, residual);
}

double t_of_y(double y) {
  if (!(y >= 0.0) || !(y < std::numbers::pi / 2)) {
    throw DomainError("t_of_y: y must lie in [0, pi/2)");
  }
  const long double yl = y;
  return static_cast<double>(yl / std::cos(yl) * std::exp(yl * std::tan(yl)));
}

double i_of_t(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("i_of_t: t must be positive");
  return lambert_w0({0.0, t}).imag();
}

}  // namespace stieltjes::special

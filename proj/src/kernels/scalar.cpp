#include <cmath>

#include "kernels_impl.hpp"

namespace stieltjes::kernels::detail {

void eval_log_power_scalar(const LogPowerSeries& series, std::span<const double> x, std::span<double> out) {
  const auto& c = series.coeffs;
  const int top = static_cast<int>(c.size()) - 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double s = x[i] + series.shift;
    const double log_s = std::log(s);
    const double inv_l = 1.0 / log_s;
    double poly = top >= 0 ? c[top] : 0.0;
    for (int j = top - 1; j >= 0; --j) poly = std::fma(poly, inv_l, c[j]);
    const double arg = series.alpha * std::log(log_s) - series.exponent * log_s;
    out[i] = std::exp(arg) * poly;
  }
}

DotResult dot_scalar(std::span<const double> w, std::span<const double> f) {
  double sum = 0.0;
  double comp = 0.0;
  double mag = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double p = w[i] * f[i];
    const double perr = std::fma(w[i], f[i], -p);
    const double t = sum + p;
    const double bp = t - sum;
    comp += (sum - (t - bp)) + (p - bp) + perr;
    sum = t;
    mag += std::fabs(p);
  }
  return {sum + comp, mag};
}

void vexp_scalar(std::span<const double> x, std::span<double> out) {
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::exp(x[i]);
}

void vlog_scalar(std::span<const double> x, std::span<double> out) {
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::log(x[i]);
}

}  // namespace stieltjes::kernels::detail

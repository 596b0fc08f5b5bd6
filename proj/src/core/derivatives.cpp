#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "stieltjes/core.hpp"
#include "stieltjes/errors.hpp"

namespace stieltjes::core {

DerivCoeffs deriv_coeffs(int n, double alpha) {
  if (n < 0 || n > kMaxDerivOrder) {
    throw ConfigError("deriv_coeffs: order must be in [0, " + std::to_string(kMaxDerivOrder) + "], got " +
                      std::to_string(n));
  }
  if (!std::isfinite(alpha)) throw DomainError("deriv_coeffs: alpha must be finite");
  std::vector<double> c{1.0};
  for (int k = 0; k < n; ++k) {
    std::vector<double> next(k + 2, 0.0);
    for (int j = 0; j <= k + 1; ++j) {
      double val = 0.0;
      if (j <= k) val -= (k + 1) * c[j];
      if (j >= 1) val += (alpha - (j - 1)) * c[j - 1];
      next[j] = val;
    }
    c = std::move(next);
  }
  return {n, alpha, std::move(c)};
}

double f_deriv(int n, double alpha, double a, double x) { return f_deriv(deriv_coeffs(n, alpha), a, x); }

double f_deriv(const DerivCoeffs& c, double a, double x) {
  const double s = x + a;
  if (!(s > 0.0)) throw DomainError("f_deriv: x + a must be positive (pole at x = -a)");
  const double log_s = std::log(s);
  const int n = c.n;
  if (log_s > 0.0) {
    const double inv = 1.0 / log_s;
    double poly = c.coeffs[n];
    for (int j = n - 1; j >= 0; --j) poly = std::fma(poly, inv, c.coeffs[j]);
    return std::exp(c.alpha * std::log(log_s) - (n + 1) * log_s) * poly;
  }
  double sum = 0.0;
  for (int j = 0; j <= n; ++j) {
    if (c.coeffs[j] == 0.0) continue;
    const double p = c.alpha - j;
    if (log_s == 0.0) {
      if (p < 0.0) throw DomainError("f_deriv: pole, log(x + a) = 0 with negative exponent");
      if (p == 0.0) sum += c.coeffs[j];
      continue;
    }
    if (p != std::floor(p)) throw DomainError("f_deriv: branch, log(x + a) < 0 with fractional exponent");
    sum += c.coeffs[j] * std::pow(log_s, p);
  }
  return sum * std::pow(s, -(n + 1));
}

double log_envelope_integral(const DerivCoeffs& c, double a, double x0, double lambda) {
  const double y0 = std::log(x0 + a);
  if (!(y0 > 0.0) || !(lambda > 0.0)) throw DomainError("log_envelope_integral: needs log(x0 + a) > 0 and lambda > 0");
  const double z = lambda * y0;
  double best = -std::numeric_limits<double>::infinity();
  std::vector<double> logs;
  for (int j = 0; j <= c.n; ++j) {
    if (c.coeffs[j] == 0.0) continue;
    const double p = c.alpha - j;
    double lt;
    if (p <= 0.0) {
      // y^p is nonincreasing on [y0, inf)
      lt = p * std::log(y0) - z - std::log(lambda);
    } else if (z > p + 1.0) {
      // Gamma(p+1, z) <= z^p e^{-z} z / (z - p)
      lt = p * std::log(z) - z + std::log(z / (z - p)) - (p + 1.0) * std::log(lambda);
    } else {
      lt = boost::math::lgamma(p + 1.0) + std::log(boost::math::gamma_q(p + 1.0, z)) - (p + 1.0) * std::log(lambda);
    }
    lt += std::log(std::fabs(c.coeffs[j]));
    logs.push_back(lt);
    best = std::max(best, lt);
  }
  if (logs.empty() || !std::isfinite(best)) return best;
  double acc = 0.0;
  for (double l : logs) acc += std::exp(l - best);
  return best + std::log(acc);
}

}  // namespace stieltjes::core

#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>

#include "stieltjes/errors.hpp"
#include "stieltjes/quadrature.hpp"

namespace stieltjes::numerics {

namespace {

constexpr int kMaxOrder = 128;

// Newton on P_n in long double, then map [-1, 1] -> [0, 1].
GaussRule build(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
    long double dp = 0.0L;
    for (int it = 0; it < 100; ++it) {
      long double p0 = 1.0L, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0L);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    // recompute derivative at the converged node
    long double p0 = 1.0L, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0L);
    const long double w = 2.0L / ((1.0L - x * x) * dp * dp);
    rule.nodes[i] = static_cast<double>(0.5L * (1.0L - x));
    rule.nodes[n - 1 - i] = static_cast<double>(0.5L * (1.0L + x));
    rule.weights[i] = static_cast<double>(0.5L * w);
    rule.weights[n - 1 - i] = static_cast<double>(0.5L * w);
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
  if (order < 1 || order > kMaxOrder) throw ConfigError("gauss_legendre: order must be in [1, 128]");
  static std::array<std::unique_ptr<GaussRule>, kMaxOrder + 1> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<GaussRule>(build(order));
  return *slot;
}

}  // namespace stieltjes::numerics

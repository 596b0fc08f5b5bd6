#include "stieltjes/bernoulli.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "stieltjes/errors.hpp"

namespace stieltjes::special {

namespace {

Rational binomial_exact(int n, int k) {
  Rational r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace

BernoulliTable::BernoulliTable(int vmax) {
  if (vmax < 0 || vmax > kMaxIndex) {
    throw ConfigError("bernoulli_numbers: vmax must be in [0, " + std::to_string(kMaxIndex) + "], got " +
                      std::to_string(vmax));
  }
  exact_.reserve(vmax + 1);
  exact_.emplace_back(1);
  // sum_{j=0}^{n} C(n+1, j) B_j = 0
  for (int n = 1; n <= vmax; ++n) {
    Rational acc = 0;
    for (int j = 0; j < n; ++j) acc += binomial_exact(n + 1, j) * exact_[j];
    exact_.push_back(-acc / (n + 1));
  }
  approx_.reserve(exact_.size());
  for (const auto& b : exact_) {
    const auto num = boost::multiprecision::numerator(b);
    const auto den = boost::multiprecision::denominator(b);
    approx_.push_back(num.convert_to<long double>() / den.convert_to<long double>());
  }
  binomial_.resize(vmax + 1);
  for (int n = 0; n <= vmax; ++n) {
    binomial_[n].resize(n + 1);
    binomial_[n][0] = 1.0L;
    for (int k = 1; k <= n; ++k) binomial_[n][k] = binomial_[n][k - 1] * (n - k + 1) / k;
  }
}

const Rational& BernoulliTable::exact(int n) const {
  if (n < 0 || n > vmax()) throw DomainError("BernoulliTable: index out of range");
  return exact_[n];
}

double BernoulliTable::value(int n) const { return static_cast<double>(value_ld(n)); }

long double BernoulliTable::value_ld(int n) const {
  if (n < 0 || n > vmax()) throw DomainError("BernoulliTable: index out of range");
  return approx_[n];
}

double BernoulliTable::polynomial(int n, double t) const {
  if (n < 0 || n > vmax()) throw DomainError("BernoulliTable: polynomial order out of range");
  // Horner over powers t^n, t^{n-1}, ..., t^0 whose coefficients are C(n,k) B_k.
  const long double tl = t;
  long double acc = 0.0L;
  for (int k = 0; k <= n; ++k) acc = acc * tl + binomial_[n][k] * approx_[k];
  return static_cast<double>(acc);
}

double BernoulliTable::periodic(int n, double x) const {
  if (n < 1) throw DomainError("periodic_bernoulli: order must be >= 1");
  return polynomial(n, x - std::floor(x));
}

double BernoulliTable::sup_abs_periodic(int n) const {
  if (n < 1 || n > vmax()) throw DomainError("BernoulliTable: order out of range");
  if (n % 2 == 0) return static_cast<double>(std::fabs(approx_[n]));
  if (n == 1) return 0.5;
  long double zeta = 0.0L;
  for (int k = 1; k <= 64; ++k) zeta += std::pow(static_cast<long double>(k), -n);
  zeta += std::pow(64.0L, 1 - n) / (n - 1);
  long double factorial = 1.0L;
  for (int k = 2; k <= n; ++k) factorial *= k;
  return static_cast<double>(2.0L * factorial * zeta / std::pow(2.0L * std::numbers::pi_v<long double>, n));
}

const BernoulliTable& BernoulliTable::shared() {
  static const BernoulliTable table(kMaxIndex);
  return table;
}

BernoulliTable bernoulli_numbers(int vmax) { return BernoulliTable(vmax); }

}  // namespace stieltjes::special

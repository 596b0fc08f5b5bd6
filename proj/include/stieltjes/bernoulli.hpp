#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace stieltjes::special {

using Rational = boost::multiprecision::cpp_rational;

/// Exact Bernoulli numbers B_0..B_vmax, immutable after construction.
///
/// Convention: B_1 = -1/2. Only even indices enter the Euler-Maclaurin
/// corrections, so the choice matters for the polynomials B_n(t) alone.
class BernoulliTable {
 public:
  static constexpr int kMaxIndex = 60;

  /// Throws ConfigError when vmax is negative or above kMaxIndex.
  explicit BernoulliTable(int vmax);

  int vmax() const { return static_cast<int>(exact_.size()) - 1; }
  const Rational& exact(int n) const;
  double value(int n) const;
  long double value_ld(int n) const;

  /// Bernoulli polynomial B_n(t).
  double polynomial(int n, double t) const;

  /// Periodic Bernoulli function P_n(x) = B_n({x}), no factorial normalisation.
  double periodic(int n, double x) const;

  /// Upper bound on sup_t |B_n(t)|: exact |B_n| for even n, 2 n! zeta(n) / (2 pi)^n for odd n >= 3.
  double sup_abs_periodic(int n) const;

  /// Process-wide table up to kMaxIndex. Built once; safe to share across threads.
  static const BernoulliTable& shared();

 private:
  std::vector<Rational> exact_;
  std::vector<long double> approx_;
  std::vector<std::vector<long double>> binomial_;
};

inline double periodic_bernoulli(const BernoulliTable& table, int v, double x) {
  return table.periodic(v, x);
}

/// Convenience wrapper over the shared table.
BernoulliTable bernoulli_numbers(int vmax);

}  // namespace stieltjes::special

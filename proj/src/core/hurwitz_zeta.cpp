#include <cmath>

#include "stieltjes/bernoulli.hpp"
#include "stieltjes/core.hpp"
#include "stieltjes/errors.hpp"

namespace stieltjes::core {

// Direct sum up to N, then Euler-Maclaurin at N + a with twelve Bernoulli corrections.
double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0) || !std::isfinite(s)) throw DomainError("hurwitz_zeta: s must be > 1");
  if (!(a > 0.0) || a > 1.0) throw DomainError("hurwitz_zeta: a must lie in (0, 1]");
  constexpr int kDirect = 24;
  constexpr int kCorrections = 12;
  const long double sl = s;
  long double sum = 0.0L;
  for (int n = kDirect - 1; n >= 0; --n) sum += std::pow(n + static_cast<long double>(a), -sl);
  const long double x = kDirect + static_cast<long double>(a);
  sum += std::pow(x, 1.0L - sl) / (sl - 1.0L);
  sum += 0.5L * std::pow(x, -sl);
  const auto& table = special::BernoulliTable::shared();
  // term_j = B_2j/(2j)! * s(s+1)...(s+2j-2) * x^{-s-2j+1}
  long double rising = sl;
  long double fact = 2.0L;
  long double power = std::pow(x, -sl - 1.0L);
  for (int j = 1; j <= kCorrections; ++j) {
    sum += table.value_ld(2 * j) / fact * rising * power;
    rising *= (sl + 2 * j - 1) * (sl + 2 * j);
    fact *= (2 * j + 1) * (2 * j + 2);
    power /= x * x;
  }
  return static_cast<double>(sum);
}

}  // namespace stieltjes::core

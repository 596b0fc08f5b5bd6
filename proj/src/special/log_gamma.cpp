#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "stieltjes/errors.hpp"
#include "stieltjes/special_functions.hpp"

namespace stieltjes::special {

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("log_gamma: x must be positive");
  // boost's lgamma keeps no global sign state, unlike ::lgamma.
  return boost::math::lgamma(x);
}

}  // namespace stieltjes::special

#pragma once

#include <complex>

namespace stieltjes {

// A point sigma + i t of the complex plane. Saddle points, contour nodes and
// phase values all use this carrier.
using ComplexPoint = std::complex<double>;

namespace special {

/// Principal branch W0 of the Lambert W function.
///
/// Halley iteration carried out in long double, started from log(1+z) when
/// |z| >= 1/e and from the series z - z^2 otherwise. The result satisfies
/// |w e^w - z| <= 1e-13 max(1, |z|). Arguments on the branch cut
/// (-inf, -1/e) raise DomainError; an iteration that fails to settle within
/// 50 steps raises LambertNonConvergence with the last iterate.
ComplexPoint lambert_w0(ComplexPoint z);

/// T(y) = y / cos(y) * exp(y tan y), the inverse of t -> Im W0(i t), for 0 <= y < pi/2.
double t_of_y(double y);

/// Im W0(i t) for t > 0; always in (0, pi/2).
double i_of_t(double t);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

}  // namespace special
}  // namespace stieltjes

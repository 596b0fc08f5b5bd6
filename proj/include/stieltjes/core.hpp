#pragma once

#include <complex>
#include <string_view>
#include <vector>

namespace stieltjes::core {

inline constexpr int kMaxDerivOrder = 60;

/// f^(n)(x) = (x+a)^{-(n+1)} sum_j coeffs[j] log^{alpha-j}(x+a) for f(x) = log^alpha(x+a)/(x+a).
struct DerivCoeffs {
  int n = 0;
  double alpha = 0.0;
  std::vector<double> coeffs;
};

DerivCoeffs deriv_coeffs(int n, double alpha);

/// n-th derivative of log^alpha(x+a)/(x+a). Points with x+a <= 1 are accepted only
/// when every surviving power of the logarithm is an integer and nonnegative
/// where the logarithm vanishes.
double f_deriv(int n, double alpha, double a, double x);
double f_deriv(const DerivCoeffs& c, double a, double x);

/// log of an upper bound on the integral of sum_j |c_j| y^{alpha-j} e^{-lambda y}
/// over y >= log(x0 + a). With lambda = n this bounds the integral of |f^(n)| over [x0, inf).
double log_envelope_integral(const DerivCoeffs& c, double a, double x0, double lambda);

enum class EmMethod { automatic, real_axis, contour };

std::string_view method_name(EmMethod m);

struct EmConfig {
  int m = 1;
  int v = 8;
  double tail_cut = 0.0;  // 0 selects the cut automatically
  int quad_order = 16;
  double tol = 1e-10;
  EmMethod method = EmMethod::automatic;
  int max_fourier_terms = 200;

  /// Throws ConfigError on an invalid combination.
  void validate() const;
};

struct TailIntegral {
  double value = 0.0;  // integral over [m, inf) of B_v({x}) f^(v)(x)
  double err = 0.0;
  double cut = 0.0;    // M where quadrature hands over to the asymptotic tail
  double quadrature_err = 0.0;
  double tail_err = 0.0;
  double rounding_err = 0.0;
};

/// Any v in [1, 60] is accepted here (odd orders included).
TailIntegral tail_integral(double alpha, double a, int m, int v, const EmConfig& cfg = {});

struct StieltjesResult {
  double c_value = 0.0;
  std::complex<double> gamma_value;
  double err_bound = 0.0;  // absolute, for c_value; gamma_value adds only the rounding of the shift
  EmConfig config_used;
  EmMethod method_used = EmMethod::real_axis;
  int fourier_terms = 0;
};

/// C_alpha(a) = gamma_alpha(a) - log^alpha(a)/a.
StieltjesResult c_alpha(double alpha, double a, const EmConfig& cfg = {});

/// Same computation; gamma_value adds log^alpha(a)/a on the principal branch
/// (0^0 = 1, so gamma_0(1) = C_0(1) + 1).
StieltjesResult gamma_alpha(double alpha, double a, const EmConfig& cfg = {});

/// Hurwitz zeta for real s > 1 and a in (0, 1].
double hurwitz_zeta(double s, double a);

}  // namespace stieltjes::core

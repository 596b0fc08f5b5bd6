#pragma once

// Data-parallel inner loops of the quadratures.
//
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2+FMA variant compiled in its own translation unit. The variant is
// picked once at first use from CPUID; STIELTJES_SIMD=scalar|avx2 overrides
// the choice. Tests call both variants explicitly and compare them.

#include <span>
#include <string_view>

namespace stieltjes::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// True when the running CPU can execute the variant.
bool isa_supported(Isa isa);

/// The variant used by the overloads without an explicit Isa.
Isa active_isa();

/// f(x) = exp(alpha log L - exponent log s) * sum_j coeffs[j] L^{-j},
/// s = x + shift, L = log s. Requires s > 1 for every x.
struct LogPowerSeries {
  double alpha = 0.0;
  double shift = 1.0;
  double exponent = 1.0;
  std::span<const double> coeffs;
};

void eval_log_power(Isa isa, const LogPowerSeries& series, std::span<const double> x, std::span<double> out);
inline void eval_log_power(const LogPowerSeries& series, std::span<const double> x, std::span<double> out) {
  eval_log_power(active_isa(), series, x, out);
}

struct DotResult {
  double value = 0.0;
  double magnitude = 0.0;  // sum |w_i f_i|, used for rounding estimates
};

/// Compensated sum of w_i * f_i (error-free products, Neumaier accumulation).
DotResult dot(Isa isa, std::span<const double> w, std::span<const double> f);
inline DotResult dot(std::span<const double> w, std::span<const double> f) { return dot(active_isa(), w, f); }

// Elementwise exp and log, exposed for accuracy tests.
void vexp(Isa isa, std::span<const double> x, std::span<double> out);
void vlog(Isa isa, std::span<const double> x, std::span<double> out);

}  // namespace stieltjes::kernels

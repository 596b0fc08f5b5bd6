#include <cstdlib>
#include <string>

#include "kernels_impl.hpp"
#include "stieltjes/errors.hpp"

namespace stieltjes::kernels {

namespace {

Isa detect() {
  if (const char* env = std::getenv("STIELTJES_SIMD")) {
    const std::string choice(env);
    if (choice == "scalar") return Isa::scalar;
    if (choice == "avx2" && isa_supported(Isa::avx2)) return Isa::avx2;
  }
  return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

void check_isa(Isa isa) {
  if (!isa_supported(isa)) throw ConfigError("kernel variant not available: " + std::string(isa_name(isa)));
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) {
  if (isa == Isa::scalar) return true;
#if defined(STIELTJES_HAVE_AVX2)
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

void eval_log_power(Isa isa, const LogPowerSeries& series, std::span<const double> x, std::span<double> out) {
  check_isa(isa);
#if defined(STIELTJES_HAVE_AVX2)
  if (isa == Isa::avx2) return detail::eval_log_power_avx2(series, x, out);
#endif
  detail::eval_log_power_scalar(series, x, out);
}

DotResult dot(Isa isa, std::span<const double> w, std::span<const double> f) {
  check_isa(isa);
#if defined(STIELTJES_HAVE_AVX2)
  if (isa == Isa::avx2) return detail::dot_avx2(w, f);
#endif
  return detail::dot_scalar(w, f);
}

void vexp(Isa isa, std::span<const double> x, std::span<double> out) {
  check_isa(isa);
#if defined(STIELTJES_HAVE_AVX2)
  if (isa == Isa::avx2) return detail::vexp_avx2(x, out);
#endif
  detail::vexp_scalar(x, out);
}

void vlog(Isa isa, std::span<const double> x, std::span<double> out) {
  check_isa(isa);
#if defined(STIELTJES_HAVE_AVX2)
  if (isa == Isa::avx2) return detail::vlog_avx2(x, out);
#endif
  detail::vlog_scalar(x, out);
}

}  // namespace stieltjes::kernels

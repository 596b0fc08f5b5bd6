#pragma once

#include "stieltjes/kernels.hpp"

namespace stieltjes::kernels::detail {

void eval_log_power_scalar(const LogPowerSeries& series, std::span<const double> x, std::span<double> out);
DotResult dot_scalar(std::span<const double> w, std::span<const double> f);
void vexp_scalar(std::span<const double> x, std::span<double> out);
void vlog_scalar(std::span<const double> x, std::span<double> out);

#if defined(STIELTJES_HAVE_AVX2)
void eval_log_power_avx2(const LogPowerSeries& series, std::span<const double> x, std::span<double> out);
DotResult dot_avx2(std::span<const double> w, std::span<const double> f);
void vexp_avx2(std::span<const double> x, std::span<double> out);
void vlog_avx2(std::span<const double> x, std::span<double> out);
#endif

}  // namespace stieltjes::kernels::detail

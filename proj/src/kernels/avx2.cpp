// Compiled with -mavx2 -mfma. Only reached after a CPUID check.

#include <immintrin.h>

#include <array>
#include <cmath>
#include <cstdint>

#include "kernels_impl.hpp"

namespace stieltjes::kernels::detail {

namespace {

constexpr double kLn2Hi = 6.93147180369123816490e-01;
constexpr double kLn2Lo = 1.90821492927058770002e-10;
constexpr double kLog2e = 1.44269504088896338700e+00;

inline __m256d set1(double v) { return _mm256_set1_pd(v); }

// 2^n for integral n in [-1022, 1023] held in a double vector.
inline __m256d pow2_int(__m256d n) {
  const __m128i n32 = _mm256_cvtpd_epi32(n);
  __m256i n64 = _mm256_cvtepi32_epi64(n32);
  n64 = _mm256_add_epi64(n64, _mm256_set1_epi64x(1023));
  return _mm256_castsi256_pd(_mm256_slli_epi64(n64, 52));
}

__m256d exp4(__m256d x) {
  const __m256d hi_lim = set1(709.782712893384);
  const __m256d lo_lim = set1(-745.1332191019412);
  const __m256d overflow = _mm256_cmp_pd(x, hi_lim, _CMP_GT_OQ);
  const __m256d underflow = _mm256_cmp_pd(x, lo_lim, _CMP_LT_OQ);
  const __m256d nan_mask = _mm256_cmp_pd(x, x, _CMP_UNORD_Q);
  __m256d xc = _mm256_min_pd(_mm256_max_pd(x, lo_lim), hi_lim);

  const __m256d n = _mm256_round_pd(_mm256_mul_pd(xc, set1(kLog2e)), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n, set1(kLn2Hi), xc);
  r = _mm256_fnmadd_pd(n, set1(kLn2Lo), r);

  // Taylor series to degree 13; |r| <= ln2/2.
  static constexpr std::array<double, 14> kInvFact = {
      1.0,
      1.0,
      1.0 / 2,
      1.0 / 6,
      1.0 / 24,
      1.0 / 120,
      1.0 / 720,
      1.0 / 5040,
      1.0 / 40320,
      1.0 / 362880,
      1.0 / 3628800,
      1.0 / 39916800,
      1.0 / 479001600,
      1.0 / 6227020800.0,
  };
  __m256d p = set1(kInvFact[13]);
  for (int k = 12; k >= 0; --k) p = _mm256_fmadd_pd(p, r, set1(kInvFact[k]));

  // Split the scaling so that both factors stay normal; the second product
  // rounds into the subnormal range when needed.
  const __m256d n1 = _mm256_floor_pd(_mm256_mul_pd(n, set1(0.5)));
  const __m256d n2 = _mm256_sub_pd(n, n1);
  __m256d result = _mm256_mul_pd(_mm256_mul_pd(p, pow2_int(n1)), pow2_int(n2));

  result = _mm256_blendv_pd(result, set1(HUGE_VAL), overflow);
  result = _mm256_blendv_pd(result, _mm256_setzero_pd(), underflow);
  result = _mm256_blendv_pd(result, x, nan_mask);
  return result;
}

// fdlibm-style log; subnormal inputs are scaled by 2^54 first.
__m256d log4(__m256d x_in) {
  constexpr double kLg1 = 6.666666666666735130e-01;
  constexpr double kLg2 = 3.999999999940941908e-01;
  constexpr double kLg3 = 2.857142874366239149e-01;
  constexpr double kLg4 = 2.222219843214978396e-01;
  constexpr double kLg5 = 1.818357216161805012e-01;
  constexpr double kLg6 = 1.531383769920937332e-01;
  constexpr double kLg7 = 1.479819860511658591e-01;

  const __m256d tiny = _mm256_cmp_pd(x_in, set1(2.2250738585072014e-308), _CMP_LT_OQ);
  const __m256d x = _mm256_blendv_pd(x_in, _mm256_mul_pd(x_in, set1(18014398509481984.0)), tiny);
  const __m256i bits = _mm256_castpd_si256(x);
  // Biased exponent (1..2046 for positive normals) converted exactly through 2^52.
  const __m256i biased = _mm256_srli_epi64(bits, 52);
  const __m256d magic = set1(4503599627370496.0);
  __m256d e = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(biased, _mm256_castpd_si256(magic))), magic);
  e = _mm256_sub_pd(e, set1(1023.0));
  e = _mm256_sub_pd(e, _mm256_and_pd(tiny, set1(54.0)));

  const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
  const __m256i one_bits = _mm256_set1_epi64x(0x3FF0000000000000LL);
  __m256d m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mant_mask), one_bits));

  const __m256d big = _mm256_cmp_pd(m, set1(1.4142135623730951), _CMP_GT_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, set1(0.5)), big);
  e = _mm256_add_pd(e, _mm256_and_pd(big, set1(1.0)));

  const __m256d f = _mm256_sub_pd(m, set1(1.0));
  const __m256d s = _mm256_div_pd(f, _mm256_add_pd(set1(2.0), f));
  const __m256d z = _mm256_mul_pd(s, s);
  const __m256d w = _mm256_mul_pd(z, z);
  const __m256d t1 = _mm256_mul_pd(w, _mm256_fmadd_pd(w, _mm256_fmadd_pd(w, set1(kLg6), set1(kLg4)), set1(kLg2)));
  const __m256d t2 = _mm256_mul_pd(
      z, _mm256_fmadd_pd(w, _mm256_fmadd_pd(w, _mm256_fmadd_pd(w, set1(kLg7), set1(kLg5)), set1(kLg3)), set1(kLg1)));
  const __m256d rr = _mm256_add_pd(t1, t2);
  const __m256d hfsq = _mm256_mul_pd(set1(0.5), _mm256_mul_pd(f, f));
  // e*ln2_hi - ((hfsq - (s*(hfsq+R) + e*ln2_lo)) - f)
  const __m256d inner = _mm256_fmadd_pd(e, set1(kLn2Lo), _mm256_mul_pd(s, _mm256_add_pd(hfsq, rr)));
  const __m256d tail = _mm256_sub_pd(_mm256_sub_pd(hfsq, inner), f);
  __m256d result = _mm256_fmsub_pd(e, set1(kLn2Hi), tail);

  const __m256d nonpos = _mm256_cmp_pd(x, _mm256_setzero_pd(), _CMP_LE_OQ);
  const __m256d zero = _mm256_cmp_pd(x, _mm256_setzero_pd(), _CMP_EQ_OQ);
  const __m256d inf = _mm256_cmp_pd(x, set1(HUGE_VAL), _CMP_EQ_OQ);
  const __m256d nan_mask = _mm256_cmp_pd(x, x, _CMP_UNORD_Q);
  result = _mm256_blendv_pd(result, set1(std::nan("")), nonpos);
  result = _mm256_blendv_pd(result, set1(-HUGE_VAL), zero);
  result = _mm256_blendv_pd(result, set1(HUGE_VAL), inf);
  result = _mm256_blendv_pd(result, x, nan_mask);
  return result;
}

// Runs op on full vectors; a partial trailing block is padded with `fill`.
template <class Op>
void for_blocks(std::span<const double> x, std::span<double> out, double fill, Op op) {
  const std::size_t n = x.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out.data() + i, op(_mm256_loadu_pd(x.data() + i)));
  if (i < n) {
    alignas(32) double buf[4] = {fill, fill, fill, fill};
    for (std::size_t j = 0; i + j < n; ++j) buf[j] = x[i + j];
    alignas(32) double res[4];
    _mm256_store_pd(res, op(_mm256_load_pd(buf)));
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] = res[j];
  }
}

}  // namespace

void vexp_avx2(std::span<const double> x, std::span<double> out) { for_blocks(x, out, 0.0, exp4); }

void vlog_avx2(std::span<const double> x, std::span<double> out) { for_blocks(x, out, 1.0, log4); }

void eval_log_power_avx2(const LogPowerSeries& series, std::span<const double> x, std::span<double> out) {
  const auto& c = series.coeffs;
  const int top = static_cast<int>(c.size()) - 1;
  const __m256d shift = set1(series.shift);
  const __m256d alpha = set1(series.alpha);
  const __m256d expo = set1(series.exponent);
  auto op = [&](__m256d xv) {
    const __m256d log_s = log4(_mm256_add_pd(xv, shift));
    const __m256d inv_l = _mm256_div_pd(set1(1.0), log_s);
    __m256d poly = set1(top >= 0 ? c[top] : 0.0);
    for (int j = top - 1; j >= 0; --j) poly = _mm256_fmadd_pd(poly, inv_l, set1(c[j]));
    const __m256d arg = _mm256_sub_pd(_mm256_mul_pd(alpha, log4(log_s)), _mm256_mul_pd(expo, log_s));
    return _mm256_mul_pd(exp4(arg), poly);
  };
  // Padding lanes use x = e so that s > 1 for any shift >= 0.
  for_blocks(x, out, 2.718281828459045, op);
}

DotResult dot_avx2(std::span<const double> w, std::span<const double> f) {
  const std::size_t n = w.size();
  __m256d sum = _mm256_setzero_pd();
  __m256d comp = _mm256_setzero_pd();
  __m256d mag = _mm256_setzero_pd();
  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFLL));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(w.data() + i);
    const __m256d b = _mm256_loadu_pd(f.data() + i);
    const __m256d p = _mm256_mul_pd(a, b);
    const __m256d perr = _mm256_fmsub_pd(a, b, p);
    const __m256d t = _mm256_add_pd(sum, p);
    const __m256d bp = _mm256_sub_pd(t, sum);
    const __m256d err = _mm256_add_pd(_mm256_sub_pd(sum, _mm256_sub_pd(t, bp)), _mm256_sub_pd(p, bp));
    comp = _mm256_add_pd(comp, _mm256_add_pd(err, perr));
    sum = t;
    mag = _mm256_add_pd(mag, _mm256_and_pd(p, abs_mask));
  }
  alignas(32) double s4[4];
  alignas(32) double c4[4];
  alignas(32) double m4[4];
  _mm256_store_pd(s4, sum);
  _mm256_store_pd(c4, comp);
  _mm256_store_pd(m4, mag);

  // Fold lanes and the remainder with the same compensated update as the scalar path.
  double total = 0.0;
  double total_comp = c4[0] + c4[1] + c4[2] + c4[3];
  double total_mag = m4[0] + m4[1] + m4[2] + m4[3];
  auto add = [&](double p, double perr) {
    const double t = total + p;
    const double bp = t - total;
    total_comp += (total - (t - bp)) + (p - bp) + perr;
    total = t;
  };
  for (double s : s4) add(s, 0.0);
  for (; i < n; ++i) {
    const double p = w[i] * f[i];
    add(p, std::fma(w[i], f[i], -p));
    total_mag += std::fabs(p);
  }
  return {total + total_comp, total_mag};
}

}  // namespace stieltjes::kernels::detail

// AVX2 variants of the dense kernels. Compiled as a separate translation
// unit with -mavx2 -mfma; only reached through the runtime dispatcher.

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "kernels_internal.hpp"

namespace jsdmix::kernels {
namespace {

// Natural log of four doubles, Cephes log.c scheme: split off the binary
// exponent, reduce the mantissa to [sqrt(1/2), sqrt(2)], evaluate a
// degree-5/5 rational approximation of log(1+t) - t + t^2/2, and
// recombine with a hi/lo split of ln 2. Inputs must be finite and > 0;
// accuracy is within a couple of ULPs (checked against std::log in the
// kernel tests).
inline __m256d log4d(__m256d x) {
  const __m256d one = _mm256_set1_pd(1.0);

  // rescale subnormals so the exponent field is meaningful
  const __m256d tiny =
      _mm256_cmp_pd(x, _mm256_set1_pd(2.2250738585072014e-308), _CMP_LT_OQ);
  x = _mm256_blendv_pd(x, _mm256_mul_pd(x, _mm256_set1_pd(0x1p54)), tiny);

  const __m256i bits = _mm256_castpd_si256(x);

  // unbiased exponent as a double, via the 2^52 + 2^51 integer trick
  __m256i e_i = _mm256_sub_epi64(_mm256_srli_epi64(bits, 52),
                                 _mm256_set1_epi64x(1023));
  e_i = _mm256_add_epi64(e_i, _mm256_set1_epi64x(0x4338000000000000LL));
  __m256d e = _mm256_sub_pd(_mm256_castsi256_pd(e_i),
                            _mm256_set1_pd(6755399441055744.0));
  e = _mm256_sub_pd(e, _mm256_and_pd(tiny, _mm256_set1_pd(54.0)));

  // mantissa in [1, 2), then halve anything above sqrt(2)
  __m256d m = _mm256_castsi256_pd(_mm256_or_si256(
      _mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
      _mm256_set1_epi64x(0x3FF0000000000000LL)));
  const __m256d above = _mm256_cmp_pd(
      m, _mm256_set1_pd(1.4142135623730951), _CMP_GT_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), above);
  e = _mm256_add_pd(e, _mm256_and_pd(above, one));

  const __m256d t = _mm256_sub_pd(m, one);
  const __m256d z = _mm256_mul_pd(t, t);

  __m256d num = _mm256_set1_pd(1.01875663804580931796e-4);
  num = _mm256_fmadd_pd(num, t, _mm256_set1_pd(4.97494994976747001425e-1));
  num = _mm256_fmadd_pd(num, t, _mm256_set1_pd(4.70579119878881725854e0));
  num = _mm256_fmadd_pd(num, t, _mm256_set1_pd(1.44989225341610930846e1));
  num = _mm256_fmadd_pd(num, t, _mm256_set1_pd(1.79368678507819816313e1));
  num = _mm256_fmadd_pd(num, t, _mm256_set1_pd(7.70838733755885391666e0));

  __m256d den = _mm256_add_pd(t, _mm256_set1_pd(1.12873587189167450590e1));
  den = _mm256_fmadd_pd(den, t, _mm256_set1_pd(4.52279145837532221105e1));
  den = _mm256_fmadd_pd(den, t, _mm256_set1_pd(8.29875266912776603211e1));
  den = _mm256_fmadd_pd(den, t, _mm256_set1_pd(7.11544750618563894466e1));
  den = _mm256_fmadd_pd(den, t, _mm256_set1_pd(2.31251620126765340583e1));

  __m256d y = _mm256_mul_pd(_mm256_mul_pd(t, z), _mm256_div_pd(num, den));
  y = _mm256_fnmadd_pd(e, _mm256_set1_pd(2.121944400546905827679e-4), y);
  y = _mm256_fnmadd_pd(_mm256_set1_pd(0.5), z, y);

  __m256d r = _mm256_add_pd(t, y);
  return _mm256_fmadd_pd(e, _mm256_set1_pd(0.693359375), r);
}

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// mul+add (no FMA) so the per-lane arithmetic matches the scalar kernel
// bit for bit.
void mix2_avx2(const double* a, const double* b, double wa, double wb,
               double* dst, std::size_t n) {
  const __m256d va = _mm256_set1_pd(wa);
  const __m256d vb = _mm256_set1_pd(wb);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d pa = _mm256_mul_pd(_mm256_loadu_pd(a + i), va);
    const __m256d pb = _mm256_mul_pd(_mm256_loadu_pd(b + i), vb);
    _mm256_storeu_pd(dst + i, _mm256_add_pd(pa, pb));
  }
  for (; i < n; ++i) dst[i] = wa * a[i] + wb * b[i];
}

double entropy_avx2(const double* p, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d acc = zero;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(p + i);
    const __m256d pos = _mm256_cmp_pd(v, zero, _CMP_GT_OQ);
    const __m256d arg = _mm256_blendv_pd(one, v, pos);  // ln 1 = 0 off-support
    acc = _mm256_fnmadd_pd(v, log4d(arg), acc);
  }
  double r = hsum(acc);
  for (; i < n; ++i) {
    if (p[i] > 0.0) r -= p[i] * std::log(p[i]);
  }
  return r;
}

double kl_avx2(const double* a, const double* b, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d acc = zero;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d va = _mm256_loadu_pd(a + i);
    const __m256d vb = _mm256_loadu_pd(b + i);
    const __m256d apos = _mm256_cmp_pd(va, zero, _CMP_GT_OQ);
    const __m256d bpos = _mm256_cmp_pd(vb, zero, _CMP_GT_OQ);
    if (_mm256_movemask_pd(_mm256_andnot_pd(bpos, apos)) != 0) {
      return std::numeric_limits<double>::infinity();
    }
    __m256d ratio = _mm256_div_pd(va, vb);
    ratio = _mm256_blendv_pd(one, ratio, apos);
    acc = _mm256_fmadd_pd(va, log4d(ratio), acc);
  }
  double r = hsum(acc);
  for (; i < n; ++i) {
    if (a[i] <= 0.0) continue;
    if (b[i] <= 0.0) return std::numeric_limits<double>::infinity();
    r += a[i] * std::log(a[i] / b[i]);
  }
  return r;
}

double min_mix_sum_avx2(const double* a, const double* b, double wa,
                        double wb, std::size_t n) {
  const __m256d va = _mm256_set1_pd(wa);
  const __m256d vb = _mm256_set1_pd(wb);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d pa = _mm256_mul_pd(_mm256_loadu_pd(a + i), va);
    const __m256d pb = _mm256_mul_pd(_mm256_loadu_pd(b + i), vb);
    acc = _mm256_add_pd(acc, _mm256_min_pd(pa, pb));
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += std::min(wa * a[i], wb * b[i]);
  return r;
}

double entropy_directional_avx2(const double* d, const double* r,
                                std::size_t n, bool* defined) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d acc = zero;
  int bad = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vd = _mm256_loadu_pd(d + i);
    const __m256d vr = _mm256_loadu_pd(r + i);
    const __m256d rpos = _mm256_cmp_pd(vr, zero, _CMP_GT_OQ);
    const __m256d dnz = _mm256_cmp_pd(vd, zero, _CMP_NEQ_OQ);
    bad |= _mm256_movemask_pd(_mm256_andnot_pd(rpos, dnz));
    const __m256d arg = _mm256_blendv_pd(one, vr, rpos);
    // off-support lanes have d == 0, so d*(1 + ln 1) contributes nothing
    acc = _mm256_fmadd_pd(vd, _mm256_add_pd(one, log4d(arg)), acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    if (r[i] > 0.0) {
      s += d[i] * (1.0 + std::log(r[i]));
    } else if (d[i] != 0.0) {
      bad = 1;
    }
  }
  *defined = (bad == 0);
  return -s;
}

}  // namespace

const KernelOps& avx2_kernels() {
  static const KernelOps ops{"avx2",          &mix2_avx2,
                             &entropy_avx2,   &kl_avx2,
                             &min_mix_sum_avx2, &entropy_directional_avx2};
  return ops;
}

}  // namespace jsdmix::kernels

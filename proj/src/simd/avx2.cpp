// AVX2 variants of the data-parallel kernels. Compiled with -mavx2 -mfma in
// this translation unit only; callers reach it through the runtime-dispatched
// table, never directly.

#include "zhawkes/simd/kernels.hpp"

#if defined(ZHAWKES_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>
#include <cstdint>

namespace zhawkes::simd {
namespace {

// Cephes-style exp/log polynomials, ~1-2 ulp over the ranges used here.
// exp flushes results below the smallest normal to zero.

inline __m256d exp_pd(__m256d x) {
    const __m256d exp_hi = _mm256_set1_pd(709.436);
    const __m256d exp_lo = _mm256_set1_pd(-708.396418532264106224);
    const __m256d log2e = _mm256_set1_pd(1.4426950408889634073599);
    const __m256d c1 = _mm256_set1_pd(6.93145751953125e-1);
    const __m256d c2 = _mm256_set1_pd(1.42860682030941723212e-6);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d half = _mm256_set1_pd(0.5);

    const __m256d too_small = _mm256_cmp_pd(x, exp_lo, _CMP_LT_OQ);
    const __m256d too_big = _mm256_cmp_pd(x, exp_hi, _CMP_GT_OQ);
    x = _mm256_min_pd(_mm256_max_pd(x, exp_lo), exp_hi);

    // n = floor(x * log2(e) + 1/2); r = x - n*ln2 via hi/lo split
    const __m256d n = _mm256_floor_pd(_mm256_fmadd_pd(x, log2e, half));
    x = _mm256_fnmadd_pd(n, c1, x);
    x = _mm256_fnmadd_pd(n, c2, x);

    const __m256d xx = _mm256_mul_pd(x, x);

    __m256d px = _mm256_set1_pd(1.26177193074810590878e-4);
    px = _mm256_fmadd_pd(px, xx, _mm256_set1_pd(3.02994407707441961300e-2));
    px = _mm256_fmadd_pd(px, xx, _mm256_set1_pd(9.99999999999999999910e-1));
    px = _mm256_mul_pd(px, x);

    __m256d qx = _mm256_set1_pd(3.00198505138664455042e-6);
    qx = _mm256_fmadd_pd(qx, xx, _mm256_set1_pd(2.52448340349684104192e-3));
    qx = _mm256_fmadd_pd(qx, xx, _mm256_set1_pd(2.27265548208155028766e-1));
    qx = _mm256_fmadd_pd(qx, xx, _mm256_set1_pd(2.00000000000000000005e0));

    __m256d r = _mm256_div_pd(px, _mm256_sub_pd(qx, px));
    r = _mm256_fmadd_pd(_mm256_set1_pd(2.0), r, one);

    // scale by 2^n: build the exponent bits directly
    const __m128i n32 = _mm256_cvtpd_epi32(n);
    const __m256i n64 = _mm256_cvtepi32_epi64(n32);
    const __m256i pow2 =
        _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
    r = _mm256_mul_pd(r, _mm256_castsi256_pd(pow2));

    r = _mm256_blendv_pd(r, _mm256_setzero_pd(), too_small);
    r = _mm256_blendv_pd(r, _mm256_set1_pd(HUGE_VAL), too_big);
    return r;
}

inline __m256d log_pd(__m256d x) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d sqrth = _mm256_set1_pd(0.70710678118654752440);

    // frexp: x = m * 2^e with m in [0.5, 1); assumes positive normal input
    const __m256i bits = _mm256_castpd_si256(x);
    const __m256i exp_bits = _mm256_srli_epi64(bits, 52);
    __m256d e = _mm256_cvtepi32_pd(_mm256_castsi256_si128(
        _mm256_permutevar8x32_epi32(exp_bits, _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0))));
    e = _mm256_sub_pd(e, _mm256_set1_pd(1022.0));
    const __m256i mant = _mm256_or_si256(
        _mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFll)),
        _mm256_set1_epi64x(0x3FE0000000000000ll));
    __m256d m = _mm256_castsi256_pd(mant);

    // m < sqrt(1/2): halve the exponent correction, double the mantissa
    const __m256d lt = _mm256_cmp_pd(m, sqrth, _CMP_LT_OQ);
    e = _mm256_sub_pd(e, _mm256_and_pd(lt, one));
    const __m256d m_adj = _mm256_blendv_pd(_mm256_sub_pd(m, one),
                                           _mm256_sub_pd(_mm256_add_pd(m, m), one), lt);
    m = m_adj;

    const __m256d z = _mm256_mul_pd(m, m);

    __m256d p = _mm256_set1_pd(1.01875663804580931796e-4);
    p = _mm256_fmadd_pd(p, m, _mm256_set1_pd(4.97494994976747001425e-1));
    p = _mm256_fmadd_pd(p, m, _mm256_set1_pd(4.70579119878881725854e0));
    p = _mm256_fmadd_pd(p, m, _mm256_set1_pd(1.44989225341610930846e1));
    p = _mm256_fmadd_pd(p, m, _mm256_set1_pd(1.79368678507819816313e1));
    p = _mm256_fmadd_pd(p, m, _mm256_set1_pd(7.70838733755885391666e0));

    __m256d q = _mm256_add_pd(m, _mm256_set1_pd(1.12873587189167450590e1));
    q = _mm256_fmadd_pd(q, m, _mm256_set1_pd(4.52279145837532221105e1));
    q = _mm256_fmadd_pd(q, m, _mm256_set1_pd(8.27905593416324306766e1));
    q = _mm256_fmadd_pd(q, m, _mm256_set1_pd(7.11544750618563894466e1));
    q = _mm256_fmadd_pd(q, m, _mm256_set1_pd(2.31251620126765340583e1));

    __m256d y = _mm256_mul_pd(_mm256_mul_pd(m, z), _mm256_div_pd(p, q));
    y = _mm256_fnmadd_pd(e, _mm256_set1_pd(2.121944400546905827679e-4), y);
    y = _mm256_fnmadd_pd(half, z, y);
    __m256d r = _mm256_add_pd(m, y);
    r = _mm256_fmadd_pd(e, _mm256_set1_pd(0.693359375), r);
    return r;
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s2 = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s2, _mm_unpackhi_pd(s2, s2)));
}

void decay_sums_avx2(const double* times, const double* signs, std::size_t n,
                     double t, double beta, double omega,
                     double* h_sum, double* z_sum) {
    const __m256d vt = _mm256_set1_pd(t);
    const __m256d mb = _mm256_set1_pd(-beta);
    const __m256d mo = _mm256_set1_pd(-omega);
    __m256d acc_h = _mm256_setzero_pd();
    __m256d acc_z = _mm256_setzero_pd();

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d dt = _mm256_sub_pd(vt, _mm256_loadu_pd(times + i));
        acc_h = _mm256_add_pd(acc_h, exp_pd(_mm256_mul_pd(mb, dt)));
        const __m256d ez = exp_pd(_mm256_mul_pd(mo, dt));
        acc_z = _mm256_fmadd_pd(_mm256_loadu_pd(signs + i), ez, acc_z);
    }
    double h = hsum(acc_h);
    double z = hsum(acc_z);
    for (; i < n; ++i) {
        const double dt = t - times[i];
        h += std::exp(-beta * dt);
        z += signs[i] * std::exp(-omega * dt);
    }
    *h_sum = h;
    *z_sum = z;
}

void count_ge_avx2(const double* values, std::size_t n,
                   const double* thresholds, std::size_t m,
                   std::uint64_t* counts) {
    for (std::size_t j = 0; j < m; ++j) counts[j] = 0;
    constexpr std::size_t block = 8192;
    for (std::size_t start = 0; start < n; start += block) {
        const std::size_t end = start + block < n ? start + block : n;
        for (std::size_t j = 0; j < m; ++j) {
            const __m256d thr = _mm256_set1_pd(thresholds[j]);
            std::uint64_t c = 0;
            std::size_t i = start;
            for (; i + 4 <= end; i += 4) {
                const __m256d v = _mm256_loadu_pd(values + i);
                const int mask = _mm256_movemask_pd(_mm256_cmp_pd(v, thr, _CMP_GE_OQ));
                c += static_cast<unsigned>(__builtin_popcount(mask));
            }
            for (; i < end; ++i) c += values[i] >= thresholds[j];
            counts[j] += c;
        }
    }
}

double sum_log_avx2(const double* values, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_pd(acc, log_pd(_mm256_loadu_pd(values + i)));
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += std::log(values[i]);
    return s;
}

}  // namespace

const KernelTable& avx2_table() {
    static const KernelTable table{decay_sums_avx2, count_ge_avx2, sum_log_avx2};
    return table;
}

}  // namespace zhawkes::simd

#endif  // ZHAWKES_HAVE_AVX2

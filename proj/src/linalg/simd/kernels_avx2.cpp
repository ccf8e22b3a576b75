// Compiled with -mavx2 -mfma; only called after a runtime CPU check.
#include <immintrin.h>

#include "corank/linalg/simd/row_kernels.hpp"

namespace corank::linalg::simd::avx2 {

namespace {

// t mod p for 0 <= t < 2^52. The quotient estimate is off by at most one, fixed up by selects.
inline __m256d reduce(__m256d t, __m256d p, __m256d inv_p) {
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, inv_p));
    __m256d r = _mm256_fnmadd_pd(q, p, t);
    const __m256d zero = _mm256_setzero_pd();
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), p));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, p, _CMP_GE_OQ), p));
    return r;
}

}  // namespace

void axpy_mod(double* dst, const double* src, double factor, ModPrime mp, std::size_t n) {
    const __m256d p = _mm256_set1_pd(mp.p);
    const __m256d inv_p = _mm256_set1_pd(mp.inv_p);
    const __m256d f = _mm256_set1_pd(factor);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256d s = _mm256_loadu_pd(src + j);
        __m256d d = _mm256_loadu_pd(dst + j);
        __m256d r = reduce(_mm256_mul_pd(s, f), p, inv_p);
        d = _mm256_sub_pd(d, r);
        d = _mm256_add_pd(d, _mm256_and_pd(_mm256_cmp_pd(d, zero, _CMP_LT_OQ), p));
        _mm256_storeu_pd(dst + j, d);
    }
    if (j < n) scalar::axpy_mod(dst + j, src + j, factor, mp, n - j);
}

void scale_mod(double* row, double factor, ModPrime mp, std::size_t n) {
    const __m256d p = _mm256_set1_pd(mp.p);
    const __m256d inv_p = _mm256_set1_pd(mp.inv_p);
    const __m256d f = _mm256_set1_pd(factor);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256d r = reduce(_mm256_mul_pd(_mm256_loadu_pd(row + j), f), p, inv_p);
        _mm256_storeu_pd(row + j, r);
    }
    if (j < n) scalar::scale_mod(row + j, factor, mp, n - j);
}

}  // namespace corank::linalg::simd::avx2

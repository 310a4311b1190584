#include "singraph/kernels.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

#include <cstring>

namespace sg::kernels::avx2 {

namespace {

// Per-nibble popcount via table lookup, summed into 64-bit lanes.
__attribute__((target("avx2"))) inline auto popcount256(__m256i v) -> __m256i {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3,
                                         3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

__attribute__((target("avx2"))) inline auto hsum(__m256i v) -> std::uint64_t {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

}  // namespace

__attribute__((target("avx2,popcnt"))) auto and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words)
    -> std::uint64_t {
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= words; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount256(_mm256_and_si256(x, y)));
    }
    std::uint64_t c = hsum(acc);
    for (; i < words; ++i) c += static_cast<std::uint64_t>(__builtin_popcountll(a[i] & b[i]));
    return c;
}

__attribute__((target("avx2,popcnt"))) auto popcount(const std::uint64_t* a, std::size_t words) -> std::uint64_t {
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= words; i += 4) acc = _mm256_add_epi64(acc, popcount256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i))));
    std::uint64_t c = hsum(acc);
    for (; i < words; ++i) c += static_cast<std::uint64_t>(__builtin_popcountll(a[i]));
    return c;
}

__attribute__((target("avx2"))) void bernoulli_mask(const std::uint32_t* u, const std::uint64_t* thr, std::size_t m,
                                                    std::uint64_t* out) {
    std::memset(out, 0, ((m + 63) / 64) * sizeof(std::uint64_t));
    std::size_t j = 0;
    // Both sides fit in 33 bits, so the signed 64-bit compare is exact.
    for (; j + 4 <= m; j += 4) {
        __m256i uu = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(u + j)));
        __m256i tt = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(thr + j));
        auto bits = static_cast<std::uint64_t>(_mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpgt_epi64(tt, uu))));
        out[j / 64] |= bits << (j % 64);
    }
    for (; j < m; ++j)
        if (u[j] < thr[j]) out[j / 64] |= std::uint64_t{1} << (j % 64);
}

__attribute__((target("avx2,fma"))) void caxpy(std::complex<double>* y, std::complex<double> a, const std::complex<double>* x,
                                               std::size_t m) {
    auto* yd = reinterpret_cast<double*>(y);
    const auto* xd = reinterpret_cast<const double*>(x);
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    std::size_t j = 0;
    for (; j + 2 <= m; j += 2) {
        __m256d xv = _mm256_loadu_pd(xd + 2 * j);          // xr0 xi0 xr1 xi1
        __m256d xs = _mm256_permute_pd(xv, 0b0101);         // xi0 xr0 xi1 xr1
        // a*x = (ar xr - ai xi, ar xi + ai xr)
        __m256d prod = _mm256_addsub_pd(_mm256_mul_pd(ar, xv), _mm256_mul_pd(ai, xs));
        __m256d yv = _mm256_loadu_pd(yd + 2 * j);
        _mm256_storeu_pd(yd + 2 * j, _mm256_sub_pd(yv, prod));
    }
    for (; j < m; ++j) y[j] -= a * x[j];
}

}  // namespace sg::kernels::avx2

#endif

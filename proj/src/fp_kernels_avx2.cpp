// AVX2 lane for the F_p row kernels. Four residues are processed per
// iteration as 64-bit lanes; Barrett reduction needs the high 64 bits of a
// 64x64 product, which AVX2 lacks, so it is assembled from 32-bit partial
// products. All intermediate values stay below 2^63, keeping the signed
// compare used for the final conditional subtract valid.

#include <immintrin.h>

#include "syzygy/fp_kernels.hpp"

namespace syzygy::fpk {

namespace {

// High 64 bits of t * inv for each 64-bit lane, t < 2^63.
inline __m256i mulhi_epu64(__m256i t, __m256i inv_lo, __m256i inv_hi,
                           __m256i mask32) {
    __m256i t_lo = _mm256_and_si256(t, mask32);
    __m256i t_hi = _mm256_srli_epi64(t, 32);
    __m256i ll = _mm256_mul_epu32(t_lo, inv_lo);
    __m256i lh = _mm256_mul_epu32(t_lo, inv_hi);
    __m256i hl = _mm256_mul_epu32(t_hi, inv_lo);
    __m256i hh = _mm256_mul_epu32(t_hi, inv_hi);
    __m256i cross = _mm256_add_epi64(
        _mm256_add_epi64(_mm256_srli_epi64(ll, 32), _mm256_and_si256(lh, mask32)),
        _mm256_and_si256(hl, mask32));
    return _mm256_add_epi64(
        _mm256_add_epi64(hh, _mm256_srli_epi64(lh, 32)),
        _mm256_add_epi64(_mm256_srli_epi64(hl, 32), _mm256_srli_epi64(cross, 32)));
}

// Barrett-reduce each 64-bit lane of t (t < 2^63) to a residue < p.
inline __m256i reduce_epu64(__m256i t, __m256i vp, __m256i vp_minus_1,
                            __m256i inv_lo, __m256i inv_hi, __m256i mask32) {
    __m256i q = mulhi_epu64(t, inv_lo, inv_hi, mask32);
    // r = t - q*p computed in the low 64 bits; the true remainder is < 2p,
    // so wraparound in the discarded high half is harmless.
    __m256i q_lo = _mm256_and_si256(q, mask32);
    __m256i q_hi = _mm256_srli_epi64(q, 32);
    __m256i qp = _mm256_add_epi64(_mm256_mul_epu32(q_lo, vp),
                                  _mm256_slli_epi64(_mm256_mul_epu32(q_hi, vp), 32));
    __m256i r = _mm256_sub_epi64(t, qp);
    __m256i ge = _mm256_cmpgt_epi64(r, vp_minus_1);
    return _mm256_sub_epi64(r, _mm256_and_si256(ge, vp));
}

// Pack the low 32 bits of each 64-bit lane into the low 128 bits.
inline __m128i pack_lanes(__m256i r) {
    __m256i shuf = _mm256_shuffle_epi32(r, _MM_SHUFFLE(2, 0, 2, 0));
    __m256i perm = _mm256_permute4x64_epi64(shuf, _MM_SHUFFLE(3, 3, 2, 0));
    return _mm256_castsi256_si128(perm);
}

}  // namespace

void axpy_avx2(uint32_t* y, const uint32_t* x, uint32_t a, std::size_t n,
               const Barrett& br) {
    const __m256i vp = _mm256_set1_epi64x(br.p);
    const __m256i vp1 = _mm256_set1_epi64x(static_cast<long long>(br.p) - 1);
    const __m256i inv_lo = _mm256_set1_epi64x(static_cast<long long>(br.inv & 0xffffffffu));
    const __m256i inv_hi = _mm256_set1_epi64x(static_cast<long long>(br.inv >> 32));
    const __m256i va = _mm256_set1_epi64x(a);
    const __m256i mask32 = _mm256_set1_epi64x(0xffffffffll);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i xv = _mm256_cvtepu32_epi64(
            _mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i)));
        __m256i yv = _mm256_cvtepu32_epi64(
            _mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i)));
        __m256i t = _mm256_add_epi64(yv, _mm256_mul_epu32(xv, va));
        __m256i r = reduce_epu64(t, vp, vp1, inv_lo, inv_hi, mask32);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(y + i), pack_lanes(r));
    }
    for (; i < n; ++i) {
        y[i] = br.reduce(static_cast<uint64_t>(a) * x[i] + y[i]);
    }
}

void scale_avx2(uint32_t* y, uint32_t a, std::size_t n, const Barrett& br) {
    const __m256i vp = _mm256_set1_epi64x(br.p);
    const __m256i vp1 = _mm256_set1_epi64x(static_cast<long long>(br.p) - 1);
    const __m256i inv_lo = _mm256_set1_epi64x(static_cast<long long>(br.inv & 0xffffffffu));
    const __m256i inv_hi = _mm256_set1_epi64x(static_cast<long long>(br.inv >> 32));
    const __m256i va = _mm256_set1_epi64x(a);
    const __m256i mask32 = _mm256_set1_epi64x(0xffffffffll);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i yv = _mm256_cvtepu32_epi64(
            _mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i)));
        __m256i t = _mm256_mul_epu32(yv, va);
        __m256i r = reduce_epu64(t, vp, vp1, inv_lo, inv_hi, mask32);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(y + i), pack_lanes(r));
    }
    for (; i < n; ++i) {
        y[i] = br.reduce(static_cast<uint64_t>(a) * y[i]);
    }
}

}  // namespace syzygy::fpk

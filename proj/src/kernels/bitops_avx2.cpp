#include "tqi/bitvec.hpp"

#include <bit>
#include <immintrin.h>

// This translation unit is compiled with -mavx2. Nothing here may run
// unless cpu_has_avx2() returned true (enforced by the dispatcher).

namespace tqi {
namespace {

void xor_into_avx2(uint64_t* dst, const uint64_t* src, size_t nwords) {
    size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < nwords; ++i) dst[i] ^= src[i];
}

// Nibble-table popcount: per-byte counts via pshufb, summed with sad_epu8.
inline __m256i popcount_bytes(__m256i v) {
    const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                           0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(table, lo), _mm256_shuffle_epi8(table, hi));
}

uint64_t popcount_avx2(const uint64_t* a, size_t nwords) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256()));
    }
    uint64_t lanes[4];
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(lanes), acc);
    uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < nwords; ++i) total += std::popcount(a[i]);
    return total;
}

uint64_t and_popcount_avx2(const uint64_t* a, const uint64_t* b, size_t nwords) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i v = _mm256_and_si256(va, vb);
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256()));
    }
    uint64_t lanes[4];
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(lanes), acc);
    uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < nwords; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

}  // namespace

const BitKernels& avx2_kernels() {
    static const BitKernels k{xor_into_avx2, popcount_avx2, and_popcount_avx2, "avx2"};
    return k;
}

}  // namespace tqi

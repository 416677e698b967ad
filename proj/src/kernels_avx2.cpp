// AVX2 variants of the word kernels. Compiled with -mavx2 in its own
// translation unit; the dispatcher only hands out these pointers after a
// runtime CPU check, so the rest of the library stays baseline-ISA clean.

#include "neqr/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <bit>

namespace neqr::kern {

namespace {

void butterfly_pass_avx2(uint64_t* words, size_t count, uint64_t mask, unsigned shift) {
    const __m256i vmask = _mm256_set1_epi64x(static_cast<long long>(mask));
    size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
        __m256i t = _mm256_slli_epi64(_mm256_and_si256(v, vmask), static_cast<int>(shift));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(words + i), _mm256_xor_si256(v, t));
    }
    for (; i < count; ++i) {
        words[i] ^= (words[i] & mask) << shift;
    }
}

void xor_into_avx2(uint64_t* dst, const uint64_t* src, size_t count) {
    size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < count; ++i) {
        dst[i] ^= src[i];
    }
}

// Per-byte popcount via two nibble table lookups, summed into 64-bit lanes
// with a zero SAD.
inline __m256i popcount_epi64(__m256i v) {
    const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                           0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_nibble = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_nibble);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_nibble);
    __m256i counts =
        _mm256_add_epi8(_mm256_shuffle_epi8(table, lo), _mm256_shuffle_epi8(table, hi));
    return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

uint64_t popcount_avx2(const uint64_t* words, size_t count) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
        acc = _mm256_add_epi64(acc, popcount_epi64(v));
    }
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < count; ++i) {
        total += static_cast<uint64_t>(std::popcount(words[i]));
    }
    return total;
}

} // namespace

namespace detail {

const KernelSet* avx2_kernelset() {
    static const KernelSet set{butterfly_pass_avx2, xor_into_avx2, popcount_avx2, "avx2"};
    return &set;
}

} // namespace detail

} // namespace neqr::kern

#endif // __AVX2__

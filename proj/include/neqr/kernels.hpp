#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace neqr::kern {

// One entry per data-parallel inner loop of the library. Every variant of a
// kernel computes bit-identical results; selecting one only changes speed.
struct KernelSet {
    // w[i] ^= (w[i] & mask) << shift for each of `count` words. One butterfly
    // pass whose block size (= shift) is smaller than a word.
    void (*butterfly_pass)(uint64_t* words, size_t count, uint64_t mask, unsigned shift);

    // dst[i] ^= src[i]. One butterfly pass at whole-word granularity.
    void (*xor_into)(uint64_t* dst, const uint64_t* src, size_t count);

    // Total number of set bits across `count` words.
    uint64_t (*popcount)(const uint64_t* words, size_t count);

    const char* name;
};

const KernelSet& scalar_kernels();

// nullptr unless AVX2 was compiled in and the running CPU supports it.
const KernelSet* avx2_kernels();

// Kernel set the library routes through. Defaults to the fastest supported
// variant; select() overrides it ("scalar", "avx2", or "auto").
const KernelSet& active();
bool select(std::string_view name);

} // namespace neqr::kern

#include "neqr/kernels.hpp"

#include <bit>

namespace neqr::kern {

namespace {

void butterfly_pass_scalar(uint64_t* words, size_t count, uint64_t mask, unsigned shift) {
    for (size_t i = 0; i < count; ++i) {
        words[i] ^= (words[i] & mask) << shift;
    }
}

void xor_into_scalar(uint64_t* dst, const uint64_t* src, size_t count) {
    for (size_t i = 0; i < count; ++i) {
        dst[i] ^= src[i];
    }
}

uint64_t popcount_scalar(const uint64_t* words, size_t count) {
    uint64_t total = 0;
    for (size_t i = 0; i < count; ++i) {
        total += static_cast<uint64_t>(std::popcount(words[i]));
    }
    return total;
}

} // namespace

const KernelSet& scalar_kernels() {
    static const KernelSet set{butterfly_pass_scalar, xor_into_scalar, popcount_scalar, "scalar"};
    return set;
}

} // namespace neqr::kern

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "neqr/kernels.hpp"

namespace neqr {

// Fixed-length bit vector packed LSB-first into 64-bit words: bit j lives in
// word j/64 at position j%64. Unused high bits of the last word are kept zero
// so whole-word comparison and popcount stay exact.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(size_t bits) : size_(bits), words_((bits + 63) / 64, 0) {}

    size_t size() const { return size_; }
    size_t word_count() const { return words_.size(); }

    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(size_t i, bool value) {
        uint64_t bit = uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= bit;
        } else {
            words_[i >> 6] &= ~bit;
        }
    }

    void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

    std::span<uint64_t> words() { return words_; }
    std::span<const uint64_t> words() const { return {words_.data(), words_.size()}; }

    uint64_t popcount() const { return kern::active().popcount(words_.data(), words_.size()); }

    // this ^= other; sizes must match.
    void xor_with(const BitVec& other) {
        kern::active().xor_into(words_.data(), other.words_.data(), words_.size());
    }

    // Zeroes any bits at positions >= size() in the last word.
    void mask_tail() {
        size_t used = size_ & 63;
        if (used != 0 && !words_.empty()) {
            words_.back() &= (uint64_t{1} << used) - 1;
        }
    }

    // Calls f(index) for every set bit in ascending index order.
    template <typename F>
    void for_each_set_bit(F&& f) const {
        for (size_t wi = 0; wi < words_.size(); ++wi) {
            uint64_t w = words_[wi];
            while (w != 0) {
                f(wi * 64 + static_cast<size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    bool operator==(const BitVec&) const = default;

private:
    size_t size_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace neqr

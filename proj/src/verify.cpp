#include "neqr/verify.hpp"

#include <bit>
#include <string>

#include "neqr/error.hpp"

namespace neqr {

bool eval_plane(std::span<const ProductTerm> gates, uint32_t assignment) {
    bool value = false;
    for (const ProductTerm& g : gates) {
        value ^= g.matches(assignment);
    }
    return value;
}

BitVec plane_truth_table(std::span<const ProductTerm> gates, unsigned m) {
    BitVec table(size_t{1} << m);
    const auto full = static_cast<uint32_t>((uint64_t{1} << m) - 1);
    for (const ProductTerm& g : gates) {
        // The gate fires on positive_mask | s for every subset s of the
        // variables it leaves unconstrained.
        const uint32_t free = full & ~(g.positive_mask | g.negative_mask);
        uint32_t s = free;
        while (true) {
            table.flip(g.positive_mask | s);
            if (s == 0) break;
            s = (s - 1) & free;
        }
    }
    return table;
}

GrayImage reconstruct_image(const Circuit& c) {
    GrayImage img;
    img.n = c.n;
    img.q = c.q;
    img.pixels.assign(img.pixel_count(), 0);
    for (uint32_t i = 0; i < c.q; ++i) {
        const BitVec table = plane_truth_table(c.gates[i], 2 * c.n);
        table.for_each_set_bit(
            [&](size_t k) { img.pixels[k] |= static_cast<uint16_t>(uint32_t{1} << i); });
    }
    return img;
}

EquivalenceReport equivalent(const Circuit& c1, const Circuit& c2) {
    if (c1.n != c2.n || c1.q != c2.q) {
        raise(ErrorKind::DimensionMismatch,
              "circuits disagree on shape: n " + std::to_string(c1.n) + " vs " +
                  std::to_string(c2.n) + ", q " + std::to_string(c1.q) + " vs " +
                  std::to_string(c2.q));
    }
    const unsigned m = 2 * c1.n;
    for (uint32_t i = 0; i < c1.q; ++i) {
        BitVec diff = plane_truth_table(c1.gates[i], m);
        diff.xor_with(plane_truth_table(c2.gates[i], m));
        const auto words = diff.words();
        for (size_t w = 0; w < words.size(); ++w) {
            if (words[w] != 0) {
                const uint64_t k = w * 64 + static_cast<uint64_t>(std::countr_zero(words[w]));
                return {false, Mismatch{i, k}};
            }
        }
    }
    return {true, std::nullopt};
}

} // namespace neqr

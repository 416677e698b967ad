#include "neqr/transform.hpp"

#include <bit>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "neqr/error.hpp"
#include "neqr/kernels.hpp"

namespace neqr {

namespace {

// Even-block selectors for butterfly passes whose block size fits in a word.
constexpr uint64_t kInWordMask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull,
};

Basis flipped(Basis kind) { return kind == Basis::Minterm ? Basis::Pprm : Basis::Minterm; }

} // namespace

CoefficientVector pprm_forward(const CoefficientVector& v) {
    CoefficientVector out = v;
    out.kind = flipped(v.kind);

    auto words = out.bits.words();
    const kern::KernelSet& k = kern::active();
    for (unsigned pass = 0; pass < v.m; ++pass) {
        if (pass < 6) {
            // Block pairs live inside each word: XOR even blocks onto odd.
            k.butterfly_pass(words.data(), words.size(), kInWordMask[pass], 1u << pass);
        } else {
            // Blocks are whole word runs: XOR lower half onto upper half.
            const size_t half = size_t{1} << (pass - 6);
            for (size_t base = 0; base < words.size(); base += 2 * half) {
                k.xor_into(words.data() + base + half, words.data() + base, half);
            }
        }
    }
    return out;
}

namespace {

// Grow R(s) -> R(s+1) = [[R(s), 0], [R(s), R(s)]] starting from R(0) = [1].
// Row j occupies words [j*row_words, (j+1)*row_words). The matrix depends
// only on m, so the most recent one is cached: test batches call the oracle
// thousands of times at one order and the build dominates otherwise.
std::shared_ptr<const std::vector<uint64_t>> dense_rows(unsigned m) {
    static std::mutex guard;
    static unsigned cached_m = ~0u;
    static std::shared_ptr<const std::vector<uint64_t>> cached;

    const std::scoped_lock lock(guard);
    if (m == cached_m && cached) {
        return cached;
    }
    const size_t dim = size_t{1} << m;
    const size_t row_words = (dim + 63) / 64;
    auto rows = std::make_shared<std::vector<uint64_t>>(dim * row_words, 0);
    uint64_t* data = rows->data();
    data[0] = 1;
    for (unsigned s = 0; s < m; ++s) {
        const size_t size = size_t{1} << s;
        for (size_t i = 0; i < size; ++i) {
            const uint64_t* lower = data + i * row_words;
            uint64_t* upper = data + (size + i) * row_words;
            if (size < 64) {
                upper[0] = lower[0] | (lower[0] << size);
            } else {
                const size_t half_words = size / 64;
                for (size_t w = 0; w < half_words; ++w) {
                    upper[w] = lower[w];
                    upper[half_words + w] = lower[w];
                }
            }
        }
    }
    cached = std::move(rows);
    cached_m = m;
    return cached;
}

} // namespace

CoefficientVector pprm_naive(const CoefficientVector& v) {
    if (v.m > 14) {
        raise(ErrorKind::OrderTooLargeForOracle,
              "m=" + std::to_string(v.m) + " exceeds oracle limit 14");
    }
    const size_t dim = size_t{1} << v.m;
    const size_t row_words = (dim + 63) / 64;
    const auto rows = dense_rows(v.m);

    CoefficientVector out;
    out.m = v.m;
    out.kind = flipped(v.kind);
    out.bits = BitVec(dim);
    auto a = v.bits.words();
    auto b = out.bits.words();
    for (size_t j = 0; j < dim; ++j) {
        const uint64_t* row = rows->data() + j * row_words;
        // Row j is zero above bit j (its set bits are the subsets of j), so
        // the fold stops at word j>>6. Parity distributes over the XOR fold.
        uint64_t acc = 0;
        for (size_t w = 0; w <= (j >> 6); ++w) {
            acc ^= row[w] & a[w];
        }
        b[j >> 6] |= uint64_t{static_cast<unsigned>(std::popcount(acc)) & 1u} << (j & 63);
    }
    return out;
}

std::vector<uint32_t> term_literals(uint64_t j, unsigned m) {
    if (m > 32 || j >= (uint64_t{1} << m)) {
        raise(ErrorKind::IndexOutOfRange,
              "term " + std::to_string(j) + " outside [0, 2^" + std::to_string(m) + ")");
    }
    std::vector<uint32_t> vars;
    for (unsigned i = 0; i < m; ++i) {
        if ((j >> i) & 1u) {
            vars.push_back(i);
        }
    }
    return vars;
}

} // namespace neqr

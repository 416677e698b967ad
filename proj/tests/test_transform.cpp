#include <bit>
#include <vector>

#include "doctest.h"

#include "neqr/error.hpp"
#include "neqr/image.hpp"
#include "neqr/transform.hpp"

using namespace neqr;

namespace {

CoefficientVector make_vec(unsigned m, std::initializer_list<int> bits,
                           Basis kind = Basis::Minterm) {
    CoefficientVector v;
    v.m = m;
    v.kind = kind;
    v.bits = BitVec(size_t{1} << m);
    size_t i = 0;
    for (int b : bits) v.bits.set(i++, b != 0);
    return v;
}

CoefficientVector random_vec(unsigned m, SplitMix64& rng) {
    CoefficientVector v;
    v.m = m;
    v.kind = Basis::Minterm;
    v.bits = BitVec(size_t{1} << m);
    for (auto& w : v.bits.words()) w = rng.next();
    v.bits.mask_tail();
    return v;
}

// Value of the function at `assignment`, read from either basis directly.
bool eval_basis(const CoefficientVector& v, uint64_t assignment) {
    if (v.kind == Basis::Minterm) {
        return v.bits.get(assignment);
    }
    bool acc = false;
    v.bits.for_each_set_bit([&](size_t j) {
        if ((assignment & j) == j) acc = !acc;
    });
    return acc;
}

} // namespace

TEST_SUITE("transform") {

TEST_CASE("two-variable worked example") {
    const auto b = pprm_forward(make_vec(2, {0, 1, 1, 1}));
    CHECK(b.kind == Basis::Pprm);
    CHECK(b.bits.get(0) == false);
    CHECK(b.bits.get(1) == true); // x0
    CHECK(b.bits.get(2) == true); // x1
    CHECK(b.bits.get(3) == true); // x1 x0
    CHECK(pprm_naive(make_vec(2, {0, 1, 1, 1})).bits == b.bits);
}

TEST_CASE("single variable matrix") {
    // [[1,0],[1,1]]: b0 = a0, b1 = a0 ^ a1
    for (auto fn : {pprm_forward, pprm_naive}) {
        CHECK(fn(make_vec(1, {1, 0})).bits == make_vec(1, {1, 1}).bits);
        CHECK(fn(make_vec(1, {0, 1})).bits == make_vec(1, {0, 1}).bits);
        CHECK(fn(make_vec(1, {1, 1})).bits == make_vec(1, {1, 0}).bits);
    }
}

TEST_CASE("first minterm expands to every product term") {
    const auto b3 = pprm_forward(make_vec(3, {1, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(b3.bits.popcount() == 8);
    const auto b2 = pprm_naive(make_vec(2, {1, 0, 0, 0}));
    CHECK(b2.bits.popcount() == 4);
}

TEST_CASE("zero maps to zero and kind always flips") {
    const auto z = pprm_forward(make_vec(4, {}));
    CHECK(z.bits.popcount() == 0);
    CHECK(z.kind == Basis::Pprm);
    CHECK(pprm_forward(z).kind == Basis::Minterm);
}

TEST_CASE("butterfly equals the dense matrix oracle") {
    // exhaustive at m=4
    for (uint32_t raw = 0; raw < 65536; ++raw) {
        CoefficientVector v;
        v.m = 4;
        v.kind = Basis::Minterm;
        v.bits = BitVec(16);
        v.bits.words()[0] = raw;
        const auto fast = pprm_forward(v);
        const auto slow = pprm_naive(v);
        REQUIRE(fast.bits == slow.bits);
        REQUIRE(fast.kind == slow.kind);
    }
    // random spot checks up to the oracle bound
    SplitMix64 rng(31);
    for (unsigned m = 5; m <= 14; ++m) {
        for (int trial = 0; trial < 25; ++trial) {
            const auto v = random_vec(m, rng);
            CHECK(pprm_forward(v).bits == pprm_naive(v).bits);
        }
    }
}

TEST_CASE("transform is an involution") {
    for (uint32_t raw = 0; raw < 65536; ++raw) {
        CoefficientVector v;
        v.m = 4;
        v.kind = Basis::Minterm;
        v.bits = BitVec(16);
        v.bits.words()[0] = raw;
        REQUIRE(pprm_forward(pprm_forward(v)).bits == v.bits);
    }
    SplitMix64 rng(32);
    for (unsigned m = 5; m <= 22; ++m) {
        const auto v = random_vec(m, rng);
        CHECK(pprm_forward(pprm_forward(v)).bits == v.bits);
    }
}

TEST_CASE("transform is linear over GF(2)") {
    SplitMix64 rng(33);
    for (unsigned m : {3u, 6u, 9u, 12u}) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto u = random_vec(m, rng);
            const auto v = random_vec(m, rng);
            auto sum = u;
            sum.bits.xor_with(v.bits);
            auto expect = pprm_forward(u);
            expect.bits.xor_with(pprm_forward(v).bits);
            CHECK(pprm_forward(sum).bits == expect.bits);
        }
    }
}

TEST_CASE("both bases evaluate to the same function") {
    SplitMix64 rng(34);
    for (unsigned m = 1; m <= 12; ++m) {
        const auto v = random_vec(m, rng);
        const auto b = pprm_forward(v);
        for (uint64_t a = 0; a < (uint64_t{1} << m); ++a) {
            REQUIRE(eval_basis(v, a) == eval_basis(b, a));
        }
    }
}

TEST_CASE("single minterm k yields 2^(m - popcount(k)) product terms") {
    for (unsigned m = 1; m <= 6; ++m) {
        for (uint64_t k = 0; k < (uint64_t{1} << m); ++k) {
            CoefficientVector v;
            v.m = m;
            v.kind = Basis::Minterm;
            v.bits = BitVec(size_t{1} << m);
            v.bits.set(k, true);
            const auto expected = uint64_t{1}
                                  << (m - static_cast<unsigned>(std::popcount(k)));
            CHECK(pprm_forward(v).bits.popcount() == expected);
        }
    }
}

TEST_CASE("unused tail bits stay zero") {
    SplitMix64 rng(35);
    const auto v = random_vec(3, rng);
    const auto b = pprm_forward(v);
    CHECK((b.bits.words()[0] >> 8) == 0);
}

TEST_CASE("term literals decode set bits") {
    CHECK(term_literals(0, 4).empty());
    CHECK(term_literals(3, 4) == std::vector<uint32_t>{0, 1});
    CHECK(term_literals(5, 3) == std::vector<uint32_t>{0, 2});
    CHECK(term_literals(15, 4) == std::vector<uint32_t>{0, 1, 2, 3});
    CHECK_THROWS_AS(term_literals(8, 3), Error);
    try {
        term_literals(16, 4);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IndexOutOfRange);
    }
}

TEST_CASE("oracle rejects orders past its bound") {
    CoefficientVector v;
    v.m = 15;
    v.kind = Basis::Minterm;
    v.bits = BitVec(size_t{1} << 15);
    CHECK_THROWS_AS(pprm_naive(v), Error);
    try {
        pprm_naive(v);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OrderTooLargeForOracle);
    }
}

} // TEST_SUITE

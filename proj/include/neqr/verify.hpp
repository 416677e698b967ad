#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "neqr/circuit.hpp"
#include "neqr/image.hpp"

namespace neqr {

// XOR over the gates that match the coordinate assignment. This is the exact
// Boolean content of the circuit: every gate is a classically controlled X,
// so exhaustive evaluation is a complete equivalence check.
bool eval_plane(std::span<const ProductTerm> gates, uint32_t assignment);

// Truth table of a gate list over all 2^m assignments, bit k = value at
// coordinate k. Work is sum over gates of 2^(m - controls), far below the
// 2^m * gates of assignment-at-a-time evaluation.
BitVec plane_truth_table(std::span<const ProductTerm> gates, unsigned m);

// The image a circuit encodes: pixel k accumulates plane i's value at k into
// bit i.
GrayImage reconstruct_image(const Circuit& c);

struct Mismatch {
    uint32_t plane = 0;
    uint64_t coordinate = 0; // pixel index k; Y = k >> n, X = k & (2^n - 1)
};

struct EquivalenceReport {
    bool equivalent = false;
    std::optional<Mismatch> counterexample;
};

// Exhaustive comparison of two circuits on every plane and coordinate.
// Reports the first difference in (plane, coordinate) order.
EquivalenceReport equivalent(const Circuit& c1, const Circuit& c2);

} // namespace neqr

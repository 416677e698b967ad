#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "neqr/image.hpp"

namespace neqr {

// One multi-controlled-X gate: fires when every positive_mask variable is 1
// and every negative_mask variable is 0. The two masks never overlap.
struct ProductTerm {
    uint32_t positive_mask = 0;
    uint32_t negative_mask = 0;

    unsigned control_count() const {
        return static_cast<unsigned>(std::popcount(positive_mask | negative_mask));
    }

    bool matches(uint32_t assignment) const {
        return (assignment & positive_mask) == positive_mask &&
               (assignment & negative_mask) == 0;
    }

    bool operator==(const ProductTerm&) const = default;
};

enum class CircuitForm { Esop, Pprm };

// Gate-count-only MCNOT decompositions: McnotPlain uses no ancilla and costs
// 3*2^m - 4 elementary gates; McnotReset uses two reusable ancilla qubits and
// costs 19m - 32. Controls of 0 or 1 cost 1 (X and CNOT) under both.
enum class CostModel { McnotPlain, McnotReset };

const char* to_string(CostModel model);

// Per-plane gate lists over m = 2n coordinate variables. Esop gates carry
// full polarity (positive|negative covers all m bits); Pprm gates are purely
// positive with distinct masks within a plane.
struct Circuit {
    uint32_t n = 0;
    uint32_t q = 0;
    CircuitForm form = CircuitForm::Esop;
    std::vector<std::vector<ProductTerm>> gates;

    size_t gate_count() const {
        size_t total = 0;
        for (const auto& plane : gates) total += plane.size();
        return total;
    }
};

// One full-polarity gate per set minterm, ascending coordinate order.
Circuit synthesize_esop(const ImagePlanes& planes);

// Reed-Muller transform each plane, then one positive-polarity gate per
// nonzero coefficient, ascending term order. Term 0 is a bare X.
Circuit synthesize_pprm(const ImagePlanes& planes);

// Elementary-gate cost of one gate with m_controls controls.
uint64_t qc_gate(int m_controls, CostModel model);

// Sum of qc_gate over every gate. With count_polarity_x, each negative
// control adds 2 for the X gates that conjugate it.
uint64_t circuit_cost(const Circuit& c, CostModel model, bool count_polarity_x = false);

// OpenQASM 3 text: registers coord[2n] and gray[q], a Hadamard per coordinate
// qubit, then the gates plane-major in ascending mask order.
std::string export_qasm(const Circuit& c);

} // namespace neqr

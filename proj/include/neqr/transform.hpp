#pragma once

#include <cstdint>
#include <vector>

#include "neqr/bitvec.hpp"

namespace neqr {

enum class Basis { Minterm, Pprm };

// Coefficient vector of a Boolean function over m variables, indexed so that
// coefficient j lives at bit j. In the Minterm basis bit j says whether the
// function is 1 on assignment j; in the Pprm basis it says whether product
// term j (variables = set bits of j) appears in the positive-polarity
// Reed-Muller expansion.
struct CoefficientVector {
    unsigned m = 0;
    Basis kind = Basis::Minterm;
    BitVec bits;

    bool operator==(const CoefficientVector&) const = default;
};

// Reed-Muller transform as m word-packed butterfly passes. The transform
// matrix is an involution over GF(2), so the same call maps Minterm -> Pprm
// and back; kind is flipped on the returned copy.
CoefficientVector pprm_forward(const CoefficientVector& v);

// Reference oracle: materializes the full 2^m x 2^m transform matrix by
// iterated Kronecker product of [[1,0],[1,1]] and applies it row by row.
// Only for m <= 14; quadratic in vector length.
CoefficientVector pprm_naive(const CoefficientVector& v);

// Variable indices of product term j, ascending: {i : bit i of j == 1}.
// Index 0 is the constant term; 2^m - 1 is the full product.
std::vector<uint32_t> term_literals(uint64_t j, unsigned m);

} // namespace neqr

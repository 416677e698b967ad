#pragma once

#include <stdexcept>
#include <string>

namespace neqr {

enum class ErrorKind {
    // image input
    NonSquare,
    NonPowerOfTwoDimension,
    UnsupportedMagic,
    MalformedHeader,
    TruncatedData,
    OrderOutOfRange,
    // transform
    OrderTooLargeForOracle,
    IndexOutOfRange,
    // costing
    NegativeControlCount,
    ZeroBaseline,
    ZeroOptimizedCost,
    DimensionMismatch,
    // fitting
    InsufficientPoints,
    NonFiniteInput,
    SingularNormalEquations,
    InvalidParams,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace neqr

#include "neqr/error.hpp"

namespace neqr {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::NonPowerOfTwoDimension: return "NonPowerOfTwoDimension";
    case ErrorKind::UnsupportedMagic: return "UnsupportedMagic";
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::TruncatedData: return "TruncatedData";
    case ErrorKind::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorKind::OrderTooLargeForOracle: return "OrderTooLargeForOracle";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NegativeControlCount: return "NegativeControlCount";
    case ErrorKind::ZeroBaseline: return "ZeroBaseline";
    case ErrorKind::ZeroOptimizedCost: return "ZeroOptimizedCost";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InsufficientPoints: return "InsufficientPoints";
    case ErrorKind::NonFiniteInput: return "NonFiniteInput";
    case ErrorKind::SingularNormalEquations: return "SingularNormalEquations";
    case ErrorKind::InvalidParams: return "InvalidParams";
    }
    return "UnknownError";
}

} // namespace neqr

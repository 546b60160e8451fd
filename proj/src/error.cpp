#include "infodecomp/error.hpp"

namespace infodecomp {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidSpec: return "invalid variable spec";
        case ErrorCode::DuplicateDim: return "duplicate dim";
        case ErrorCode::WrongState: return "wrong dataset state";
        case ErrorCode::WidthMismatch: return "row width mismatch";
        case ErrorCode::NonFinite: return "non-finite value";
        case ErrorCode::EmptyData: return "empty data";
        case ErrorCode::DegenerateRange: return "degenerate range";
        case ErrorCode::UnknownDim: return "unknown dim";
        case ErrorCode::BadShift: return "bad shift index";
        case ErrorCode::BadCoords: return "bad coordinates";
        case ErrorCode::OverlappingGroups: return "overlapping groups";
        case ErrorCode::ZeroProbability: return "zero probability";
        case ErrorCode::UnsupportedSourceCount: return "unsupported source count";
        case ErrorCode::LengthMismatch: return "length mismatch";
        case ErrorCode::BadLag: return "bad lag";
        case ErrorCode::IndexOutOfRange: return "index out of range";
        case ErrorCode::TooFewTrials: return "too few trials";
    }
    return "unknown error";
}

}  // namespace infodecomp

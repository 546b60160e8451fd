#pragma once

#include <stdexcept>
#include <string>

namespace infodecomp {

enum class ErrorCode {
    InvalidSpec = 1,
    DuplicateDim,
    WrongState,
    WidthMismatch,
    NonFinite,
    EmptyData,
    DegenerateRange,
    UnknownDim,
    BadShift,
    BadCoords,
    OverlappingGroups,
    ZeroProbability,
    UnsupportedSourceCount,
    LengthMismatch,
    BadLag,
    IndexOutOfRange,
    TooFewTrials,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// that front ends (CLI exit codes, C boundary status values) can map them.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace infodecomp

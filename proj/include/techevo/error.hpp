#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace techevo {

enum class ErrorCode {
    Io,
    MalformedRow,
    NonPositiveValue,
    DuplicateTimestamp,
    TooFewPoints,
    InsufficientOverlap,
    InvalidParams,
    LevelOutOfRange,
    KTooSmall,
    NotSShaped,
    DegenerateX,
    LengthMismatch,
    ValueAtSaturation,
    InvalidAlpha,
    InvalidSpec,
    EmptyEarlyPhase,
    MalformedReport,
};

// Stable name used on stderr and in tests ("MalformedRow", ...).
std::string_view error_name(ErrorCode code) noexcept;

// Process exit code for a failure category; see README for the table.
int exit_code_for(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code), detail_(detail) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace techevo

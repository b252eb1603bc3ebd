#include "techevo/error.hpp"

namespace techevo {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Io: return "IoError";
        case ErrorCode::MalformedRow: return "MalformedRow";
        case ErrorCode::NonPositiveValue: return "NonPositiveValue";
        case ErrorCode::DuplicateTimestamp: return "DuplicateTimestamp";
        case ErrorCode::TooFewPoints: return "TooFewPoints";
        case ErrorCode::InsufficientOverlap: return "InsufficientOverlap";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
        case ErrorCode::KTooSmall: return "KTooSmall";
        case ErrorCode::NotSShaped: return "NotSShaped";
        case ErrorCode::DegenerateX: return "DegenerateX";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::ValueAtSaturation: return "ValueAtSaturation";
        case ErrorCode::InvalidAlpha: return "InvalidAlpha";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::EmptyEarlyPhase: return "EmptyEarlyPhase";
        case ErrorCode::MalformedReport: return "MalformedReport";
    }
    return "UnknownError";
}

int exit_code_for(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Io:
            return 2;
        case ErrorCode::MalformedRow:
        case ErrorCode::NonPositiveValue:
        case ErrorCode::DuplicateTimestamp:
        case ErrorCode::TooFewPoints:
        case ErrorCode::MalformedReport:
            return 3;
        case ErrorCode::InsufficientOverlap:
            return 4;
        case ErrorCode::InvalidParams:
        case ErrorCode::LevelOutOfRange:
        case ErrorCode::KTooSmall:
        case ErrorCode::NotSShaped:
            return 5;
        case ErrorCode::DegenerateX:
        case ErrorCode::LengthMismatch:
        case ErrorCode::ValueAtSaturation:
        case ErrorCode::InvalidAlpha:
            return 6;
        case ErrorCode::InvalidSpec:
        case ErrorCode::EmptyEarlyPhase:
            return 7;
    }
    return 1;
}

}  // namespace techevo

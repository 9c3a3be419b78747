#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tpgabor {

enum class ErrorCode {
    ZeroDelta,
    NonpositiveScale,
    EmptyFactorList,
    NonIncreasingSequence,
    LengthMismatch,
    TypeTooSmall,
    NegativeDeterminant,
    ConditionCrViolated,
    EmptyWindow,
    SingularSubmatrix,
    UnboundedEntries,
    DensityViolation,
    ConditionViolated,
    WindowTooSmall,
    DegenerateSpectrum,
    InvalidArgument,
};

inline std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ZeroDelta: return "ZeroDelta";
    case ErrorCode::NonpositiveScale: return "NonpositiveScale";
    case ErrorCode::EmptyFactorList: return "EmptyFactorList";
    case ErrorCode::NonIncreasingSequence: return "NonIncreasingSequence";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::TypeTooSmall: return "TypeTooSmall";
    case ErrorCode::NegativeDeterminant: return "NegativeDeterminant";
    case ErrorCode::ConditionCrViolated: return "ConditionCrViolated";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::SingularSubmatrix: return "SingularSubmatrix";
    case ErrorCode::UnboundedEntries: return "UnboundedEntries";
    case ErrorCode::DensityViolation: return "DensityViolation";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what)
        , code_(code)
    {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace tpgabor

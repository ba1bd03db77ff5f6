#pragma once

#include <stdexcept>
#include <string>

namespace qdust {

/// Category of failure. The CLI maps these onto exit codes: NoConvergence is
/// a numerical failure (exit 3), everything else is an input/validation error
/// (exit 2).
enum class ErrorCode {
    NonPositiveDensity,
    NonPositiveMass,
    QuasineutralityViolated,
    BadInput,
    BadGrid,
    MissingParameter,
    IonResonance,
    ZeroFrequency,
    ModeOutOfRange,
    StepTooLarge,
    NoSignal,
    TooShort,
    Underdetermined,
    DegenerateData,
    NoConvergence,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NonPositiveDensity:      return "NonPositiveDensity";
        case ErrorCode::NonPositiveMass:         return "NonPositiveMass";
        case ErrorCode::QuasineutralityViolated: return "QuasineutralityViolated";
        case ErrorCode::BadInput:                return "BadInput";
        case ErrorCode::BadGrid:                 return "BadGrid";
        case ErrorCode::MissingParameter:        return "MissingParameter";
        case ErrorCode::IonResonance:            return "IonResonance";
        case ErrorCode::ZeroFrequency:           return "ZeroFrequency";
        case ErrorCode::ModeOutOfRange:          return "ModeOutOfRange";
        case ErrorCode::StepTooLarge:            return "StepTooLarge";
        case ErrorCode::NoSignal:                return "NoSignal";
        case ErrorCode::TooShort:                return "TooShort";
        case ErrorCode::Underdetermined:         return "Underdetermined";
        case ErrorCode::DegenerateData:          return "DegenerateData";
        case ErrorCode::NoConvergence:           return "NoConvergence";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace qdust

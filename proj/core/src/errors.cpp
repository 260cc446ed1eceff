#include "snailamp/errors.hpp"

namespace snailamp {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorCode::NonPositiveStiffness: return "NonPositiveStiffness";
        case ErrorCode::NoSignChange: return "NoSignChange";
        case ErrorCode::OutOfTunableRange: return "OutOfTunableRange";
        case ErrorCode::DegenerateCalibration: return "DegenerateCalibration";
        case ErrorCode::InvalidOrder: return "InvalidOrder";
        case ErrorCode::FrequencyMismatch: return "FrequencyMismatch";
        case ErrorCode::EmptyCascade: return "EmptyCascade";
        case ErrorCode::SingularNetwork: return "SingularNetwork";
        case ErrorCode::Unstable: return "Unstable";
        case ErrorCode::NoConvergence: return "NoConvergence";
    }
    return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

Error::Error(ErrorCode code, const std::string& message, double payload)
    : std::runtime_error(message), code_(code), payload_(payload) {}

}  // namespace snailamp

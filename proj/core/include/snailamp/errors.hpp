#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace snailamp {

enum class ErrorCode {
    InvalidArgument,
    ConvergenceFailure,
    NonPositiveStiffness,
    NoSignChange,
    OutOfTunableRange,
    DegenerateCalibration,
    InvalidOrder,
    FrequencyMismatch,
    EmptyCascade,
    SingularNetwork,
    Unstable,
    NoConvergence,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception thrown by all core operations. `payload()` carries an optional
/// numeric value associated with the failure (e.g. the critical pump
/// resistance for ErrorCode::Unstable); NaN when unused.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);
    Error(ErrorCode code, const std::string& message, double payload);

    ErrorCode code() const noexcept { return code_; }
    double payload() const noexcept { return payload_; }

private:
    ErrorCode code_;
    double payload_ = std::numeric_limits<double>::quiet_NaN();
};

}  // namespace snailamp

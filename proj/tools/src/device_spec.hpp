#pragma once

#include <optional>
#include <string>

#include "snailamp/array_resonator.hpp"

namespace snailamp::cli {

/// Device description loaded from a spec file. Files carry laboratory units
/// (pH, fF, GHz, ohm, mA); conversion to SI happens exactly once, at load.
struct DeviceSpecFile {
    ArraySpec array;
    double z_quarter = 0.0;          // ohm
    double z_half = 0.0;             // ohm
    double center_frequency = 0.0;   // Hz
    double source_impedance = 50.0;  // ohm
    std::optional<CoilCalibration> coil;
};

/// Strict parse: unknown keys, missing keys, non-finite numbers and malformed
/// documents all throw ErrorCode::InvalidArgument with a field diagnostic;
/// coincident coil calibration points throw ErrorCode::DegenerateCalibration.
DeviceSpecFile load_device_spec(const std::string& path);

}  // namespace snailamp::cli

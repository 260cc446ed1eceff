#pragma once

#include <span>
#include <vector>

#include "snailamp/snail_cell.hpp"

namespace snailamp {

/// Series array of M identical SNAIL cells resonated by a capacitance C.
/// l_stray is an optional linear series inductance absorbing geometric
/// parasitics (calibration term, default 0).
struct ArraySpec {
    SnailParams cell;
    int m_snails;
    double capacitance;   // F
    double l_stray = 0.0; // H
};

void validate(const ArraySpec& spec);

struct TunabilityPoint {
    double flux_fraction;
    double frequency;  // Hz
};

/// Samples of resonance frequency versus flux fraction, ordered by flux.
using TunabilityCurve = std::vector<TunabilityPoint>;

/// L_array = M * L_s(flux) + l_stray, H.
double array_inductance(const ArraySpec& spec, const FluxBias& flux);

/// Resonance frequency 1/(2*pi*sqrt(L_array*C)), Hz.
double resonance_frequency(const ArraySpec& spec, const FluxBias& flux);

/// Characteristic impedance sqrt(L_array/C), ohm.
double characteristic_impedance(const ArraySpec& spec, const FluxBias& flux);

/// Sweeps resonance_frequency over a strictly increasing flux grid within
/// (-0.5, 0.5].
TunabilityCurve tunability_curve(const ArraySpec& spec, std::span<const double> flux_fractions);

/// Inverse of the tunability map on the monotone branch [0, 0.5]: flux
/// fraction at which the resonator hits the target frequency, bisected to
/// 1e-8 in flux fraction (forward residual under 1 kHz). Throws
/// ErrorCode::OutOfTunableRange when the target lies outside
/// [f(0.5), f(0)].
double flux_for_frequency(const ArraySpec& spec, double target_frequency);

/// Affine coil-current-to-flux model through two calibration pairs.
struct CoilCalibrationPoint {
    double current;        // A
    double flux_fraction;
};

struct CoilCalibration {
    CoilCalibrationPoint p0;
    CoilCalibrationPoint p1;
};

/// Flux fraction produced by a coil current (affine interpolation or
/// extrapolation). Throws ErrorCode::DegenerateCalibration when the
/// calibration currents coincide.
double coil_current_to_flux(const CoilCalibration& cal, double current);

/// Inverse map: coil current required for a flux fraction. Throws
/// ErrorCode::DegenerateCalibration when the calibration fluxes coincide.
double flux_to_coil_current(const CoilCalibration& cal, double flux_fraction);

}  // namespace snailamp

#pragma once

#include <vector>

#include "snailamp/array_resonator.hpp"

namespace snailamp {

/// Chebyshev negative-resistance prototype for the two-section transformer.
struct PrototypeSpec {
    int order;
    double ripple_db;
    std::vector<double> g_values;  // g0 .. g_{order+1}
    double fractional_bandwidth;   // w
    double center_frequency;       // Hz
    double source_impedance;       // ohm
    double negative_resistance_ratio = 1.0;  // r0, prototype load scaling
};

void validate(const PrototypeSpec& proto);

/// Builds a PrototypeSpec with g-values from the Chebyshev recurrence.
PrototypeSpec make_prototype(int order, double ripple_db, double fractional_bandwidth,
                             double center_frequency, double source_impedance,
                             double negative_resistance_ratio = 1.0);

/// Two-section quarter-wave + half-wave transformer, all sections sharing one
/// center frequency.
struct TransformerDesign {
    double z_quarter;         // ohm
    double z_half;            // ohm
    double z_jpa_target;      // ohm
    double x_slope;           // impedance slope parameter, ohm
    double b_slope;           // admittance slope parameter, S
    double center_frequency;  // Hz
};

/// Chebyshev low-pass prototype coefficients g0..g_{n+1} for the given order
/// and passband ripple. Throws ErrorCode::InvalidOrder for order < 1.
std::vector<double> chebyshev_g_values(int order, double ripple_db);

struct SlopeParameters {
    double x;  // ohm
    double b;  // S
};

/// x = g1*R/w and b = g2/(w*R) for the prototype load R.
SlopeParameters slope_parameters(const PrototypeSpec& proto, double r_load);

/// Section impedances from the slope parameters:
///   z_quarter = sqrt(z0 * r0_load),  z_half = pi/(2b),  z_jpa = 2x/pi.
TransformerDesign section_impedances(double x, double b, double z0, double r0_load,
                                     double center_frequency);

/// Full synthesis for a resonator tuned to the prototype center frequency:
/// solves the prototype load R so that 2x/pi equals the actual array
/// impedance at the operating flux, then emits all section values. Throws
/// ErrorCode::FrequencyMismatch when the resonance at the operating flux is
/// more than 1% away from the prototype center.
TransformerDesign synthesize(const PrototypeSpec& proto, const ArraySpec& spec,
                             const FluxBias& operating_flux);

}  // namespace snailamp

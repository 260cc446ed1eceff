#pragma once

#include <complex>
#include <span>
#include <vector>

#include "snailamp/array_resonator.hpp"
#include "snailamp/matching.hpp"

namespace snailamp {

/// Chain (ABCD) matrix of a two-port: b in ohms, c in siemens.
struct TwoPortMatrix {
    std::complex<double> a;
    std::complex<double> b;
    std::complex<double> c;
    std::complex<double> d;
};

/// Chain composition, source side on the left.
TwoPortMatrix operator*(const TwoPortMatrix& lhs, const TwoPortMatrix& rhs);

inline std::complex<double> determinant(const TwoPortMatrix& m) {
    return m.a * m.d - m.b * m.c;
}

/// Complete amplifier: transformer sections, SNAIL array, operating point and
/// pump. pump_strength is the negative-resistance magnitude r_p standing in
/// for pump power. line_loss_db is a uniform per-section attenuation at the
/// center frequency (0 = lossless ideal lines).
struct DeviceDesign {
    TransformerDesign transformer;
    ArraySpec array;
    FluxBias operating_flux;
    double source_impedance = 50.0;  // ohm
    double pump_strength = 0.0;      // r_p, ohm
    double line_loss_db = 0.0;       // dB per section at center
};

void validate(const DeviceDesign& design);

struct GainSample {
    double frequency;  // Hz
    std::complex<double> reflection;
    double gain_db;
};

/// Reflection-gain sweep, frequencies strictly increasing.
using GainProfile = std::vector<GainSample>;

struct FrequencyBand {
    double lo;  // Hz
    double hi;  // Hz
};

inline constexpr int kDefaultGainPoints = 2001;
inline constexpr double kDefaultGainHalfSpan = 1e9;  // Hz

/// Lossless transmission line of the given characteristic impedance and
/// electrical length theta (radians): a = d = cos theta, b = i*z*sin theta,
/// c = i*sin(theta)/z.
TwoPortMatrix line_matrix(double z_char, double electrical_length);

/// Lossy variant, attenuation in nepers over the section.
TwoPortMatrix line_matrix(double z_char, double electrical_length, double attenuation_nepers);

/// Series impedance element: a = d = 1, b = impedance, c = 0.
TwoPortMatrix series_element_matrix(std::complex<double> impedance);

/// Ordered chain product. Throws ErrorCode::EmptyCascade on an empty list.
TwoPortMatrix cascade(std::span<const TwoPortMatrix> matrices);

/// Z_in = (a*Z_t + b)/(c*Z_t + d). Throws ErrorCode::SingularNetwork when
/// |c*Z_t + d| < 1e-15.
std::complex<double> input_impedance(const TwoPortMatrix& network, std::complex<double> z_term);

std::complex<double> reflection_coefficient(std::complex<double> z_in, double z0);

/// Pumped array as a series RLC branch with negative resistance:
/// Z_t(f) = -r_p + i*2*pi*f*L_array + 1/(i*2*pi*f*C).
std::complex<double> jpa_termination(const DeviceDesign& design, double frequency);

/// Reflection off the full cascade [lambda/4, lambda/2] terminated by the
/// pumped array branch, relative to the source impedance.
std::complex<double> input_reflection(const DeviceDesign& design, double frequency);

/// Uniform sweep of input_reflection over [f_start, f_stop].
GainProfile gain_profile(const DeviceDesign& design, double f_start, double f_stop,
                         int points = kDefaultGainPoints);

/// Pump strength r_p whose peak gain over the band matches the target within
/// 0.01 dB, found by bracketed bisection. Throws ErrorCode::Unstable (payload:
/// critical r_p) when the target sits at or beyond the oscillation threshold,
/// ErrorCode::NoConvergence on the iteration cap.
double calibrate_pump(const DeviceDesign& design, double target_peak_gain_db,
                      const FrequencyBand& band);

/// Width of the largest contiguous interval with gain >= threshold, edges
/// linearly interpolated; 0 when no sample qualifies.
double bandwidth(const GainProfile& profile, double threshold_db);

/// Saturation-power scaling I_c^2 / Q^3 expressed in ratios.
double saturation_scaling(double ic_ratio, double q_ratio);

}  // namespace snailamp

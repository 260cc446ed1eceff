#include "snailamp/array_resonator.hpp"

#include <cmath>
#include <string>

#include "snailamp/constants.hpp"

namespace snailamp {

namespace {

constexpr double kFluxBisectionTolerance = 1e-8;
constexpr double kFrequencyResidualTolerance = 1e3;  // Hz

}  // namespace

void validate(const ArraySpec& spec) {
    validate(spec.cell);
    if (spec.m_snails < 1) {
        throw Error(ErrorCode::InvalidArgument,
                    "m_snails must be >= 1, got " + std::to_string(spec.m_snails));
    }
    if (!(spec.capacitance > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "capacitance must be positive");
    }
    if (!(spec.l_stray >= 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "l_stray must be non-negative");
    }
}

double array_inductance(const ArraySpec& spec, const FluxBias& flux) {
    validate(spec);
    return spec.m_snails * cell_inductance(flux, spec.cell) + spec.l_stray;
}

double resonance_frequency(const ArraySpec& spec, const FluxBias& flux) {
    const double l_array = array_inductance(spec, flux);
    return 1.0 / (constants::two_pi * std::sqrt(l_array * spec.capacitance));
}

double characteristic_impedance(const ArraySpec& spec, const FluxBias& flux) {
    const double l_array = array_inductance(spec, flux);
    return std::sqrt(l_array / spec.capacitance);
}

TunabilityCurve tunability_curve(const ArraySpec& spec, std::span<const double> flux_fractions) {
    validate(spec);
    if (flux_fractions.empty()) {
        throw Error(ErrorCode::InvalidArgument, "flux grid must be nonempty");
    }
    double previous = flux_fractions.front();
    for (std::size_t i = 0; i < flux_fractions.size(); ++i) {
        const double f = flux_fractions[i];
        if (!(f > -0.5) || !(f <= 0.5)) {
            throw Error(ErrorCode::InvalidArgument,
                        "flux fraction " + std::to_string(f) + " outside (-0.5, 0.5]");
        }
        if (i > 0 && !(f > previous)) {
            throw Error(ErrorCode::InvalidArgument, "flux grid must be strictly increasing");
        }
        previous = f;
    }

    TunabilityCurve curve;
    curve.reserve(flux_fractions.size());
    for (const double f : flux_fractions) {
        curve.push_back({f, resonance_frequency(spec, FluxBias::from_fraction(f))});
    }
    return curve;
}

double flux_for_frequency(const ArraySpec& spec, double target_frequency) {
    validate(spec);
    if (!(target_frequency > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "target frequency must be positive");
    }

    const double f_max = resonance_frequency(spec, FluxBias::from_fraction(0.0));
    const double f_min = resonance_frequency(spec, FluxBias::from_fraction(0.5));
    if (target_frequency > f_max || target_frequency < f_min) {
        throw Error(ErrorCode::OutOfTunableRange,
                    "target " + std::to_string(target_frequency * 1e-9) +
                        " GHz outside tunable range [" + std::to_string(f_min * 1e-9) +
                        ", " + std::to_string(f_max * 1e-9) + "] GHz",
                    target_frequency);
    }

    // Frequency is monotone non-increasing on [0, 0.5] for alpha < 1/n.
    double lo = 0.0;
    double hi = 0.5;
    while (hi - lo > kFluxBisectionTolerance) {
        const double mid = 0.5 * (lo + hi);
        if (resonance_frequency(spec, FluxBias::from_fraction(mid)) > target_frequency) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double frac = 0.5 * (lo + hi);

    const double achieved = resonance_frequency(spec, FluxBias::from_fraction(frac));
    if (std::abs(achieved - target_frequency) > kFrequencyResidualTolerance) {
        throw Error(ErrorCode::ConvergenceFailure,
                    "flux inversion residual " +
                        std::to_string(std::abs(achieved - target_frequency)) +
                        " Hz exceeds 1 kHz at flux fraction " + std::to_string(frac));
    }
    return frac;
}

double coil_current_to_flux(const CoilCalibration& cal, double current) {
    const double di = cal.p1.current - cal.p0.current;
    if (di == 0.0) {
        throw Error(ErrorCode::DegenerateCalibration, "calibration currents coincide");
    }
    const double slope = (cal.p1.flux_fraction - cal.p0.flux_fraction) / di;
    return cal.p0.flux_fraction + slope * (current - cal.p0.current);
}

double flux_to_coil_current(const CoilCalibration& cal, double flux_fraction) {
    if (cal.p1.current == cal.p0.current) {
        throw Error(ErrorCode::DegenerateCalibration, "calibration currents coincide");
    }
    const double df = cal.p1.flux_fraction - cal.p0.flux_fraction;
    if (df == 0.0) {
        throw Error(ErrorCode::DegenerateCalibration, "calibration flux fractions coincide");
    }
    const double slope = (cal.p1.current - cal.p0.current) / df;
    return cal.p0.current + slope * (flux_fraction - cal.p0.flux_fraction);
}

}  // namespace snailamp

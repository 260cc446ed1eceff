#include "snailamp/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "snailamp/constants.hpp"
#include "snailamp/errors.hpp"

namespace snailamp {

namespace {

constexpr double kSingularDenominator = 1e-15;
constexpr double kGainTolerance = 0.01;          // dB, calibration target window
constexpr double kBracketCollapse = 1e-9;        // relative r_p width at a pole
constexpr double kProbeStep = 1e-6;              // branch test step, relative
constexpr int kGrowthIterationCap = 80;
constexpr int kBisectionIterationCap = 200;

// Everything input_reflection needs per frequency, with the flux-dependent
// array inductance solved once.
struct ReflectionContext {
    double z_quarter;
    double z_half;
    double f_center;
    double z0;
    double l_array;
    double capacitance;
    double alpha_center;  // nepers per section at f_center
};

ReflectionContext make_context(const DeviceDesign& design) {
    validate(design);
    return {design.transformer.z_quarter,
            design.transformer.z_half,
            design.transformer.center_frequency,
            design.source_impedance,
            array_inductance(design.array, design.operating_flux),
            design.array.capacitance,
            design.line_loss_db * std::log(10.0) / 20.0};
}

std::complex<double> termination(const ReflectionContext& ctx, double r_p, double frequency) {
    const double omega = constants::two_pi * frequency;
    return {-r_p, omega * ctx.l_array - 1.0 / (omega * ctx.capacitance)};
}

std::complex<double> cascade_input_impedance(const ReflectionContext& ctx, double r_p,
                                             double frequency) {
    const double ratio = frequency / ctx.f_center;
    const double alpha = ctx.alpha_center * ratio;
    const TwoPortMatrix net = line_matrix(ctx.z_quarter, 0.5 * constants::pi * ratio, alpha) *
                              line_matrix(ctx.z_half, constants::pi * ratio, alpha);
    return input_impedance(net, termination(ctx, r_p, frequency));
}

std::complex<double> reflection(const ReflectionContext& ctx, double r_p, double frequency) {
    return reflection_coefficient(cascade_input_impedance(ctx, r_p, frequency), ctx.z0);
}

double gain_db(std::complex<double> gamma) { return 20.0 * std::log10(std::abs(gamma)); }

void require_positive_frequency(double frequency) {
    if (!(frequency > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "frequency must be positive");
    }
}

}  // namespace

TwoPortMatrix operator*(const TwoPortMatrix& lhs, const TwoPortMatrix& rhs) {
    return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
            lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

void validate(const DeviceDesign& design) {
    const TransformerDesign& t = design.transformer;
    if (t.z_quarter <= 0.0 || t.z_half <= 0.0 || t.z_jpa_target <= 0.0 || t.x_slope <= 0.0 ||
        t.b_slope <= 0.0 || t.center_frequency <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "transformer sections must be positive");
    }
    validate(design.array);
    if (design.source_impedance <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "source impedance must be positive");
    }
    if (design.pump_strength < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "pump strength must be non-negative");
    }
    if (design.line_loss_db < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "line loss must be non-negative");
    }
}

TwoPortMatrix line_matrix(double z_char, double electrical_length) {
    return line_matrix(z_char, electrical_length, 0.0);
}

TwoPortMatrix line_matrix(double z_char, double electrical_length, double attenuation_nepers) {
    if (z_char <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "characteristic impedance must be positive");
    }
    if (attenuation_nepers < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "attenuation must be non-negative");
    }
    // gamma*l = alpha + i*theta; reduces to cos/sin entries when lossless.
    const std::complex<double> gl{attenuation_nepers, electrical_length};
    const std::complex<double> ch = std::cosh(gl);
    const std::complex<double> sh = std::sinh(gl);
    return {ch, z_char * sh, sh / z_char, ch};
}

TwoPortMatrix series_element_matrix(std::complex<double> impedance) {
    return {1.0, impedance, 0.0, 1.0};
}

TwoPortMatrix cascade(std::span<const TwoPortMatrix> matrices) {
    if (matrices.empty()) {
        throw Error(ErrorCode::EmptyCascade, "cascade needs at least one two-port");
    }
    TwoPortMatrix product = matrices[0];
    for (std::size_t i = 1; i < matrices.size(); ++i) {
        product = product * matrices[i];
    }
    return product;
}

std::complex<double> input_impedance(const TwoPortMatrix& network, std::complex<double> z_term) {
    const std::complex<double> denom = network.c * z_term + network.d;
    if (std::abs(denom) < kSingularDenominator) {
        throw Error(ErrorCode::SingularNetwork, "parasitic pole at the evaluation point");
    }
    return (network.a * z_term + network.b) / denom;
}

std::complex<double> reflection_coefficient(std::complex<double> z_in, double z0) {
    if (z0 <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "reference impedance must be positive");
    }
    return (z_in - z0) / (z_in + z0);
}

std::complex<double> jpa_termination(const DeviceDesign& design, double frequency) {
    validate(design);
    require_positive_frequency(frequency);
    const double omega = constants::two_pi * frequency;
    const double l_array = array_inductance(design.array, design.operating_flux);
    return {-design.pump_strength, omega * l_array - 1.0 / (omega * design.array.capacitance)};
}

std::complex<double> input_reflection(const DeviceDesign& design, double frequency) {
    require_positive_frequency(frequency);
    return reflection(make_context(design), design.pump_strength, frequency);
}

GainProfile gain_profile(const DeviceDesign& design, double f_start, double f_stop, int points) {
    if (!(f_start > 0.0) || !(f_stop > f_start)) {
        throw Error(ErrorCode::InvalidArgument, "sweep needs 0 < f_start < f_stop");
    }
    if (points < 2) {
        throw Error(ErrorCode::InvalidArgument, "sweep needs at least two points");
    }
    const ReflectionContext ctx = make_context(design);
    const double step = (f_stop - f_start) / (points - 1);
    GainProfile profile;
    profile.reserve(points);
    for (int i = 0; i < points; ++i) {
        const double f = f_start + step * i;
        try {
            const std::complex<double> gamma = reflection(ctx, design.pump_strength, f);
            profile.push_back({f, gamma, gain_db(gamma)});
        } catch (const Error& err) {
            if (err.code() != ErrorCode::SingularNetwork) {
                throw;
            }
            std::ostringstream msg;
            msg << err.what() << " (" << f * 1e-9 << " GHz)";
            throw Error(ErrorCode::SingularNetwork, msg.str(), f);
        }
    }
    return profile;
}

double calibrate_pump(const DeviceDesign& design, double target_peak_gain_db,
                      const FrequencyBand& band) {
    if (!(target_peak_gain_db > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "target peak gain must be positive");
    }
    if (!(band.lo > 0.0) || !(band.hi > band.lo)) {
        throw Error(ErrorCode::InvalidArgument, "calibration band needs 0 < lo < hi");
    }
    const ReflectionContext ctx = make_context(design);
    const double step = (band.hi - band.lo) / (kDefaultGainPoints - 1);

    const auto peak_gain = [&](double r_p) {
        double peak_db = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < kDefaultGainPoints; ++i) {
            const double f = band.lo + step * i;
            peak_db = std::max(peak_db, gain_db(reflection(ctx, r_p, f)));
        }
        return peak_db;
    };

    const auto unstable = [&](double r_crit) -> Error {
        std::ostringstream msg;
        msg << "target " << target_peak_gain_db << " dB requires pumping at or beyond the "
            << "oscillation threshold r_p = " << r_crit << " ohm";
        return {ErrorCode::Unstable, msg.str(), r_crit};
    };

    // Peak gain rises monotonically with r_p up to the oscillation threshold,
    // where |Gamma| has a pole; past it the branch is unphysical (the pump can
    // no longer be damped by the source) and the peak falls off the far side
    // of the pole. The slope sign therefore tells the two branches apart.
    struct Probe {
        double peak_db;
        bool rising;
    };
    const auto probe = [&](double r_p) -> Probe {
        const double peak_db = peak_gain(r_p);
        const double ahead = peak_gain(r_p * (1.0 + kProbeStep) + kProbeStep);
        return {peak_db, ahead > peak_db};
    };

    // Grow an upper bracket: either a stable point at/above the target or any
    // point past the pole.
    double r_lo = 0.0;
    double r_hi = 1.0;
    Probe hi{};
    for (int i = 0;; ++i) {
        if (i > kGrowthIterationCap) {
            throw Error(ErrorCode::NoConvergence, "pump bracket search did not terminate");
        }
        hi = probe(r_hi);
        if (!hi.rising || hi.peak_db >= target_peak_gain_db) {
            break;
        }
        r_lo = r_hi;
        r_hi *= 2.0;
    }

    for (int i = 0; i < kBisectionIterationCap; ++i) {
        const double r_mid = 0.5 * (r_lo + r_hi);
        const Probe mid = probe(r_mid);
        if (mid.rising && std::abs(mid.peak_db - target_peak_gain_db) <= kGainTolerance) {
            // On the rising branch, hence strictly below the threshold.
            return r_mid;
        }
        if (mid.rising && mid.peak_db < target_peak_gain_db) {
            r_lo = r_mid;
        } else {
            r_hi = r_mid;
        }
        if (r_hi - r_lo < kBracketCollapse * std::max(1.0, r_hi)) {
            // Bracket collapsed against the pole: the target is unreachable
            // from the stable side.
            throw unstable(r_hi);
        }
    }
    throw Error(ErrorCode::NoConvergence, "pump calibration did not converge");
}

double bandwidth(const GainProfile& profile, double threshold_db) {
    if (profile.empty()) {
        throw Error(ErrorCode::InvalidArgument, "gain profile is empty");
    }
    double widest = 0.0;
    const std::size_t n = profile.size();
    std::size_t i = 0;
    while (i < n) {
        if (profile[i].gain_db < threshold_db) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < n && profile[j + 1].gain_db >= threshold_db) {
            ++j;
        }
        double left = profile[i].frequency;
        if (i > 0) {
            const GainSample& p = profile[i - 1];
            const GainSample& q = profile[i];
            left = p.frequency + (threshold_db - p.gain_db) * (q.frequency - p.frequency) /
                                     (q.gain_db - p.gain_db);
        }
        double right = profile[j].frequency;
        if (j + 1 < n) {
            const GainSample& p = profile[j];
            const GainSample& q = profile[j + 1];
            right = p.frequency + (threshold_db - p.gain_db) * (q.frequency - p.frequency) /
                                      (q.gain_db - p.gain_db);
        }
        widest = std::max(widest, right - left);
        i = j + 1;
    }
    return widest;
}

double saturation_scaling(double ic_ratio, double q_ratio) {
    if (!(ic_ratio > 0.0) || !(q_ratio > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "scaling ratios must be positive");
    }
    return ic_ratio * ic_ratio / (q_ratio * q_ratio * q_ratio);
}

}  // namespace snailamp

#include "snailamp/matching.hpp"

#include <cmath>
#include <cstddef>
#include <sstream>

#include "snailamp/constants.hpp"
#include "snailamp/errors.hpp"

namespace snailamp {

namespace {

constexpr double kFrequencyMatchTolerance = 0.01;  // relative detuning gate

}  // namespace

std::vector<double> chebyshev_g_values(int order, double ripple_db) {
    if (order < 1) {
        throw Error(ErrorCode::InvalidOrder, "prototype order must be >= 1");
    }
    if (ripple_db <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "passband ripple must be positive");
    }
    const double n = order;
    const double beta = std::log(1.0 / std::tanh(ripple_db * std::log(10.0) / 40.0));
    const double gamma = std::sinh(beta / (2.0 * n));

    std::vector<double> g(order + 2);
    g[0] = 1.0;
    double a_prev = std::sin(constants::pi / (2.0 * n));
    g[1] = 2.0 * a_prev / gamma;
    for (int k = 2; k <= order; ++k) {
        const double a_k = std::sin((2.0 * k - 1.0) * constants::pi / (2.0 * n));
        const double s = std::sin((k - 1.0) * constants::pi / n);
        g[k] = 4.0 * a_prev * a_k / ((gamma * gamma + s * s) * g[k - 1]);
        a_prev = a_k;
    }
    if (order % 2 == 1) {
        g[order + 1] = 1.0;
    } else {
        const double c = 1.0 / std::tanh(beta / 4.0);
        g[order + 1] = c * c;
    }
    return g;
}

void validate(const PrototypeSpec& proto) {
    if (proto.order < 1) {
        throw Error(ErrorCode::InvalidOrder, "prototype order must be >= 1");
    }
    if (proto.ripple_db <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "passband ripple must be positive");
    }
    if (!(proto.fractional_bandwidth > 0.0 && proto.fractional_bandwidth < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "fractional bandwidth must lie in (0, 1)");
    }
    if (proto.center_frequency <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "center frequency must be positive");
    }
    if (proto.source_impedance <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "source impedance must be positive");
    }
    if (proto.negative_resistance_ratio <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "prototype load scaling must be positive");
    }
    if (proto.g_values.size() != static_cast<std::size_t>(proto.order) + 2) {
        throw Error(ErrorCode::InvalidArgument, "prototype needs g0..g_{n+1} coefficients");
    }
    for (double gk : proto.g_values) {
        if (!(gk > 0.0)) {
            throw Error(ErrorCode::InvalidArgument, "prototype coefficients must be positive");
        }
    }
}

PrototypeSpec make_prototype(int order, double ripple_db, double fractional_bandwidth,
                             double center_frequency, double source_impedance,
                             double negative_resistance_ratio) {
    PrototypeSpec proto{order,
                        ripple_db,
                        chebyshev_g_values(order, ripple_db),
                        fractional_bandwidth,
                        center_frequency,
                        source_impedance,
                        negative_resistance_ratio};
    validate(proto);
    return proto;
}

SlopeParameters slope_parameters(const PrototypeSpec& proto, double r_load) {
    validate(proto);
    if (r_load <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "prototype load must be positive");
    }
    const double w = proto.fractional_bandwidth;
    return {proto.g_values[1] * r_load / w, proto.g_values[2] / (w * r_load)};
}

TransformerDesign section_impedances(double x, double b, double z0, double r0_load,
                                     double center_frequency) {
    if (x <= 0.0 || b <= 0.0 || z0 <= 0.0 || r0_load <= 0.0 || center_frequency <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "section parameters must be positive");
    }
    return {std::sqrt(z0 * r0_load), constants::pi / (2.0 * b), 2.0 * x / constants::pi,
            x, b, center_frequency};
}

TransformerDesign synthesize(const PrototypeSpec& proto, const ArraySpec& spec,
                             const FluxBias& operating_flux) {
    validate(proto);
    validate(spec);
    const double f_res = resonance_frequency(spec, operating_flux);
    const double f_c = proto.center_frequency;
    if (std::abs(f_res - f_c) > kFrequencyMatchTolerance * f_c) {
        std::ostringstream msg;
        msg << "resonator at " << f_res * 1e-9 << " GHz is detuned from the prototype center "
            << f_c * 1e-9 << " GHz";
        throw Error(ErrorCode::FrequencyMismatch, msg.str(), f_res);
    }
    // Pick the prototype load R so that Eq. (5) reproduces the actual array
    // impedance: z_jpa = 2x/pi with x = g1*R/w.
    const double z_jpa = characteristic_impedance(spec, operating_flux);
    const double w = proto.fractional_bandwidth;
    const double r_load = constants::pi * z_jpa * w / (2.0 * proto.g_values[1]);
    const SlopeParameters slopes = slope_parameters(proto, r_load);
    return section_impedances(slopes.x, slopes.b, proto.source_impedance,
                              r_load / proto.negative_resistance_ratio, f_c);
}

}  // namespace snailamp

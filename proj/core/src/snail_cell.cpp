#include "snailamp/snail_cell.hpp"

#include <cmath>
#include <string>

#include "snailamp/constants.hpp"

namespace snailamp {

namespace {

constexpr int kCoarseGridPoints = 1024;
constexpr int kNewtonIterationCap = 100;
constexpr double kSlopeTolerance = 1e-12;
constexpr double kStiffnessEpsilon = 1e-12;

double potential_slope(double phi, const FluxBias& flux, const SnailParams& p) {
    return p.alpha * std::sin(phi) + std::sin((phi - flux.phase) / p.n_large);
}

double potential_stiffness(double phi, const FluxBias& flux, const SnailParams& p) {
    return p.alpha * std::cos(phi) +
           std::cos((phi - flux.phase) / p.n_large) / p.n_large;
}

}  // namespace

void validate(const SnailParams& params) {
    if (params.n_large < 1) {
        throw Error(ErrorCode::InvalidArgument,
                    "n_large must be >= 1, got " + std::to_string(params.n_large));
    }
    const double alpha_max = 1.0 / params.n_large;
    if (!(params.alpha > 0.0) || !(params.alpha < alpha_max)) {
        throw Error(ErrorCode::InvalidArgument,
                    "alpha must lie in (0, 1/n_large), got " + std::to_string(params.alpha));
    }
    if (!(params.l_josephson > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "l_josephson must be positive");
    }
}

FluxBias FluxBias::from_fraction(double frac) {
    return FluxBias{frac, constants::two_pi * frac};
}

double reduced_potential(double phi, const FluxBias& flux, const SnailParams& params) {
    const double n = params.n_large;
    return -params.alpha * std::cos(phi) - n * std::cos((phi - flux.phase) / n);
}

double find_phi_min(const FluxBias& flux, const SnailParams& params) {
    validate(params);

    // Scan one full 2*pi*n period centered on the flux phase; the deep
    // large-junction well sits near phi = phi_ext, but at larger alpha the
    // potential develops satellite minima, so bracket globally first.
    const double period = constants::two_pi * params.n_large;
    const double start = flux.phase - 0.5 * period;
    const double step = period / kCoarseGridPoints;

    double best_phi = start;
    double best_u = reduced_potential(start, flux, params);
    for (int i = 1; i < kCoarseGridPoints; ++i) {
        const double phi = start + i * step;
        const double u = reduced_potential(phi, flux, params);
        if (u < best_u) {
            best_u = u;
            best_phi = phi;
        }
    }

    // Safeguarded Newton on u' inside the bracketing cell.
    double lo = best_phi - step;
    double hi = best_phi + step;
    double slope_lo = potential_slope(lo, flux, params);
    double x = best_phi;

    for (int iter = 0; iter < kNewtonIterationCap; ++iter) {
        const double slope = potential_slope(x, flux, params);
        if (std::abs(slope) <= kSlopeTolerance) {
            return x;
        }
        // Keep the sign-change bracket current.
        if (slope * slope_lo < 0.0) {
            hi = x;
        } else {
            lo = x;
            slope_lo = slope;
        }
        const double stiffness = potential_stiffness(x, flux, params);
        double next = x - slope / stiffness;
        if (!(stiffness > 0.0) || next <= lo || next >= hi) {
            next = 0.5 * (lo + hi);
        }
        x = next;
    }
    throw Error(ErrorCode::ConvergenceFailure,
                "phi_min refinement did not reach tolerance at flux fraction " +
                    std::to_string(flux.frac));
}

TaylorCoefficients taylor_coefficients(const FluxBias& flux, const SnailParams& params) {
    const double phi_min = find_phi_min(flux, params);
    const double n = params.n_large;
    const double branch = (phi_min - flux.phase) / n;
    TaylorCoefficients t;
    t.phi_min = phi_min;
    t.c2 = params.alpha * std::cos(phi_min) + std::cos(branch) / n;
    t.c3 = -params.alpha * std::sin(phi_min) - std::sin(branch) / (n * n);
    t.c4 = -params.alpha * std::cos(phi_min) - std::cos(branch) / (n * n * n);
    return t;
}

double cell_inductance(const FluxBias& flux, const SnailParams& params) {
    const TaylorCoefficients t = taylor_coefficients(flux, params);
    if (t.c2 <= kStiffnessEpsilon) {
        throw Error(ErrorCode::NonPositiveStiffness,
                    "degenerate flux point: c2 = " + std::to_string(t.c2) +
                        " at flux fraction " + std::to_string(flux.frac));
    }
    return params.l_josephson / t.c2;
}

GCoefficients g_coefficients(const FluxBias& flux, const SnailParams& params,
                             int m_snails, double total_capacitance) {
    if (m_snails < 1) {
        throw Error(ErrorCode::InvalidArgument, "m_snails must be >= 1");
    }
    if (!(total_capacitance > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "total_capacitance must be positive");
    }
    const TaylorCoefficients t = taylor_coefficients(flux, params);
    if (t.c2 <= kStiffnessEpsilon) {
        throw Error(ErrorCode::NonPositiveStiffness,
                    "degenerate flux point: c2 = " + std::to_string(t.c2) +
                        " at flux fraction " + std::to_string(flux.frac));
    }
    const double l_array = m_snails * params.l_josephson / t.c2;
    const double z_array = std::sqrt(l_array / total_capacitance);

    const double phi0_over_2pi = constants::flux_quantum / constants::two_pi;
    const double josephson_energy = phi0_over_2pi * phi0_over_2pi / params.l_josephson;
    const double phi_zpf = std::sqrt(constants::two_pi * z_array / constants::resistance_quantum);
    const double phi_cell = phi_zpf / m_snails;

    const double energy_over_h = josephson_energy / constants::planck;
    GCoefficients g;
    g.g3 = energy_over_h * t.c3 * phi_cell * phi_cell * phi_cell * m_snails / 6.0;
    g.g4 = energy_over_h * t.c4 * phi_cell * phi_cell * phi_cell * phi_cell * m_snails / 24.0;
    return g;
}

double kerr_coefficient(const FluxBias& flux, const SnailParams& params, KerrModel model) {
    const TaylorCoefficients t = taylor_coefficients(flux, params);
    if (model == KerrModel::Bare) {
        return t.c4;
    }
    return t.c4 - (5.0 / 3.0) * t.c3 * t.c3 / t.c2;
}

double kerr_free_flux(const SnailParams& params, double frac_lo, double frac_hi,
                      KerrModel model, double tolerance) {
    validate(params);
    if (!(frac_lo < frac_hi) || !(frac_lo > 0.0) || !(frac_hi < 0.5)) {
        throw Error(ErrorCode::InvalidArgument,
                    "search interval must be nonempty and inside (0, 0.5)");
    }
    if (!(tolerance > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
    }

    auto quartic = [&](double frac) {
        return kerr_coefficient(FluxBias::from_fraction(frac), params, model);
    };

    double lo = frac_lo;
    double hi = frac_hi;
    double q_lo = quartic(lo);
    double q_hi = quartic(hi);
    if (q_lo == 0.0) return lo;
    if (q_hi == 0.0) return hi;
    if (q_lo * q_hi > 0.0) {
        throw Error(ErrorCode::NoSignChange,
                    "quartic coefficient has constant sign over [" +
                        std::to_string(frac_lo) + ", " + std::to_string(frac_hi) + "]");
    }

    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        const double q_mid = quartic(mid);
        if (q_mid == 0.0) return mid;
        if (q_mid * q_lo < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            q_lo = q_mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace snailamp

#pragma once

#include "snailamp/errors.hpp"

namespace snailamp {

/// One SNAIL loop: n_large large Josephson junctions shunted by a single
/// smaller junction whose critical current is alpha times the large one.
struct SnailParams {
    double alpha;        // small/large junction critical-current ratio
    int n_large;         // large junctions in the loop
    double l_josephson;  // inductance of one large junction, H
};

/// Throws ErrorCode::InvalidArgument unless 0 < alpha < 1/n_large,
/// n_large >= 1 and l_josephson > 0.
void validate(const SnailParams& params);

/// External flux threading the loop. `frac` is Phi/Phi0; `phase` is the
/// reduced flux 2*pi*frac in radians.
struct FluxBias {
    double frac;
    double phase;

    static FluxBias from_fraction(double frac);
};

/// Taylor expansion of the reduced SNAIL potential about its minimum:
/// c_k is the k-th derivative of u at phi_min (dimensionless).
struct TaylorCoefficients {
    double phi_min;
    double c2;
    double c3;
    double c4;
};

/// Quartic-coefficient convention used by kerr_free_flux / kerr_coefficient.
/// Bare uses c4 as-is; Corrected subtracts the cubic self-interaction term
/// (5/3) * c3^2 / c2 that an amplitude expansion folds into the effective
/// quartic stiffness.
enum class KerrModel { Bare, Corrected };

/// Reduced SNAIL potential in units of the large-junction Josephson energy:
///   u(phi) = -alpha*cos(phi) - n*cos((phi - phi_ext)/n).
/// Smooth and 2*pi*n periodic in phi at fixed flux.
double reduced_potential(double phi, const FluxBias& flux, const SnailParams& params);

/// Global minimizer of reduced_potential over one 2*pi*n period. Coarse grid
/// scan brackets the minimum, then safeguarded Newton refines the stationary
/// point to |u'| <= 1e-12. Throws ErrorCode::ConvergenceFailure if the
/// refinement does not converge within the iteration cap.
double find_phi_min(const FluxBias& flux, const SnailParams& params);

/// Analytic 2nd/3rd/4th derivatives of the reduced potential at phi_min.
TaylorCoefficients taylor_coefficients(const FluxBias& flux, const SnailParams& params);

/// Flux-tunable cell inductance L_s = l_josephson / c2, H.
/// Throws ErrorCode::NonPositiveStiffness when c2 is not safely positive.
double cell_inductance(const FluxBias& flux, const SnailParams& params);

/// Third- and fourth-order nonlinearity rates of an M-cell series array, Hz.
struct GCoefficients {
    double g3;
    double g4;
};

/// Array-mode nonlinearity rates: with E_J the large-junction Josephson
/// energy and phi_zpf the array zero-point phase split evenly over M cells,
///   g3 = E_J * c3 * (phi_zpf/M)^3 * M / (6h),
///   g4 = E_J * c4 * (phi_zpf/M)^4 * M / (24h),
/// where phi_zpf^2 = 2*pi*Z / R_Q and Z = sqrt(M*L_s/C). The absolute scale
/// is a normalization choice; signs and zeros track c3/c4 exactly.
GCoefficients g_coefficients(const FluxBias& flux, const SnailParams& params,
                             int m_snails, double total_capacitance);

/// Quartic coefficient under the chosen model (see KerrModel).
double kerr_coefficient(const FluxBias& flux, const SnailParams& params,
                        KerrModel model = KerrModel::Bare);

/// Flux fraction in (frac_lo, frac_hi) where the quartic coefficient changes
/// sign, located by bracketing bisection. The interval must lie inside
/// (0, 0.5). Throws ErrorCode::NoSignChange if the coefficient has constant
/// sign over the interval.
double kerr_free_flux(const SnailParams& params, double frac_lo, double frac_hi,
                      KerrModel model = KerrModel::Bare, double tolerance = 1e-8);

}  // namespace snailamp

#pragma once

#include <numbers>

namespace snailamp::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// 2019 SI exact values.
inline constexpr double planck = 6.62607015e-34;              // J s
inline constexpr double elementary_charge = 1.602176634e-19;  // C

/// Magnetic flux quantum h/2e, Wb.
inline constexpr double flux_quantum = planck / (2.0 * elementary_charge);

/// Superconducting resistance quantum h/(2e)^2, ohm.
inline constexpr double resistance_quantum =
    planck / (4.0 * elementary_charge * elementary_charge);

}  // namespace snailamp::constants

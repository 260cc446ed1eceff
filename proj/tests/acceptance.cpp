// Acceptance harness: runs the eleven release criteria, prints one PASS/FAIL
// line per criterion with the measured values, and exits nonzero if any
// criterion (including its runtime budget) fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracles.hpp"
#include "snailamp/array_resonator.hpp"
#include "snailamp/matching.hpp"
#include "snailamp/network.hpp"
#include "snailamp/snail_cell.hpp"

using namespace snailamp;
using std::numbers::pi;

namespace {

const SnailParams kPaperCell{0.18, 3, 80e-12};
const ArraySpec kPaperArray{kPaperCell, 67, 30e-15, 0.0};
const FrequencyBand kBand{5.4e9, 7.4e9};

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& note) {
        ok = ok && condition;
        if (!detail.empty()) {
            detail += "; ";
        }
        detail += note;
        if (!condition) {
            detail += " <-- FAIL";
        }
    }
};

std::string fmt(const char* format, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, value);
    return buf;
}

double max_abs_g3(double alpha, int points) {
    const SnailParams params{alpha, 3, 80e-12};
    double peak = 0.0;
    for (int i = 1; i < points; ++i) {
        const double frac = 0.5 * i / points;
        const double g3 = g_coefficients(FluxBias::from_fraction(frac), params, 67, 30e-15).g3;
        peak = std::max(peak, std::abs(g3));
    }
    return peak;
}

DeviceDesign paper_design() {
    const FluxBias flux = FluxBias::from_fraction(flux_for_frequency(kPaperArray, 6.4e9));
    const double z_jpa = characteristic_impedance(kPaperArray, flux);
    const TransformerDesign transformer{87.0,          59.0,  z_jpa, pi * z_jpa / 2.0,
                                        pi / (2.0 * 59.0), 6.4e9};
    return {transformer, kPaperArray, flux, 50.0, 0.0, 0.0};
}

Outcome analytic_zeros() {
    Outcome out;
    double worst = 0.0;
    for (double alpha : {0.09, 0.18}) {
        const SnailParams params{alpha, 3, 80e-12};
        for (double frac : {0.0, 0.5}) {
            worst = std::max(worst,
                             std::abs(taylor_coefficients(FluxBias::from_fraction(frac), params).c3));
        }
    }
    out.require(worst < 1e-12, "max |c3| at flux 0, 0.5 = " + fmt("%.2e", worst) + " (< 1e-12)");
    return out;
}

Outcome derivative_cross_check() {
    Outcome out;
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> flux_dist(-0.5, 0.5);
    std::uniform_real_distribution<double> alpha_dist(0.02, 0.32);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const SnailParams params{alpha_dist(rng), 3, 80e-12};
        const FluxBias bias = FluxBias::from_fraction(flux_dist(rng));
        const TaylorCoefficients taylor = taylor_coefficients(bias, params);
        const oracles::FiniteDifferences fd =
            oracles::taylor_by_differences(taylor.phi_min, bias.phase, params.alpha, 3);
        worst = std::max({worst, std::abs(taylor.c2 - fd.c2), std::abs(taylor.c3 - fd.c3),
                          std::abs(taylor.c4 - fd.c4)});
    }
    out.require(worst <= 1e-7,
                "max |analytic - finite difference| over 50 pairs = " + fmt("%.2e", worst) +
                    " (<= 1e-7)");
    return out;
}

Outcome asymmetry_trend() {
    Outcome out;
    const double strong = max_abs_g3(0.18, 451);
    const double weak = max_abs_g3(0.09, 451);
    out.require(strong > weak, "max |g3|: alpha 0.18 -> " + fmt("%.3e", strong) +
                                   " Hz > alpha 0.09 -> " + fmt("%.3e", weak) + " Hz");
    return out;
}

Outcome kerr_free_existence() {
    Outcome out;
    const double root = kerr_free_flux(kPaperCell, 0.001, 0.499);
    const double scanned = oracles::sign_scan_root(
        [](double frac) {
            return taylor_coefficients(FluxBias::from_fraction(frac), kPaperCell).c4;
        },
        0.001, 0.499, 100000);
    out.require(std::isfinite(scanned), "sign change of c4 exists in (0, 0.5)");
    out.require(std::abs(root - scanned) <= 1e-6,
                "bisection " + fmt("%.8f", root) + " vs scan " + fmt("%.8f", scanned) +
                    ", |diff| = " + fmt("%.2e", std::abs(root - scanned)) + " (<= 1e-6)");
    return out;
}

Outcome frequency_model() {
    Outcome out;
    // Hand-evaluated oracle: at zero flux phi_min = 0, c2 = alpha + 1/n.
    const double c2 = 0.18 + 1.0 / 3.0;
    const double l_oracle = 67.0 * 80e-12 / c2;
    const double f_oracle = 1.0 / (2.0 * pi * std::sqrt(l_oracle * 30e-15));
    const double f_model = resonance_frequency(kPaperArray, FluxBias::from_fraction(0.0));
    out.require(std::abs(f_model - f_oracle) < 1.0,
                "model matches the hand oracle at " + fmt("%.6f", f_oracle * 1e-9) + " GHz");
    out.require(std::abs(f_model - 8.992e9) <= 1e6,
                "zero-flux resonance " + fmt("%.6f", f_model * 1e-9) + " GHz (8.992 +- 0.001)");

    std::ifstream fit_in(std::string(SNAILAMP_FIXTURES_DIR) + "/stray_fit.json");
    const nlohmann::json fit = nlohmann::json::parse(fit_in);
    ArraySpec fitted = kPaperArray;
    fitted.l_stray = fit.at("l_stray_pH").get<double>() * 1e-12;
    const double f_target = fit.at("target_frequency_GHz").get<double>() * 1e9;
    const double f_fitted = resonance_frequency(fitted, FluxBias::from_fraction(0.0));
    out.require(std::abs(f_fitted - f_target) <= 0.01 * f_target,
                "fitted l_stray " + fmt("%.1f", fitted.l_stray * 1e12) + " pH -> " +
                    fmt("%.4f", f_fitted * 1e-9) + " GHz (8.2 within 1%)");

    const double span = f_model - resonance_frequency(kPaperArray, FluxBias::from_fraction(0.45));
    out.require(span >= 2e9, "span f(0) - f(0.45) = " + fmt("%.3f", span * 1e-9) + " GHz (>= 2)");
    return out;
}

Outcome round_trip_inversion() {
    Outcome out;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double frac = 0.45 * i / 19.0;
        const double f = resonance_frequency(kPaperArray, FluxBias::from_fraction(frac));
        worst = std::max(worst, std::abs(flux_for_frequency(kPaperArray, f) - frac));
    }
    out.require(worst <= 1e-6,
                "max |flux_for_frequency(f(x)) - x| over 20 points = " + fmt("%.2e", worst) +
                    " (<= 1e-6)");
    return out;
}

Outcome transformer_equations() {
    Outcome out;
    const TransformerDesign eq3 = section_impedances(926.77, 0.026624, 50.0, 151.38, 6.4e9);
    out.require(std::abs(eq3.z_quarter - 87.0) <= 0.1,
                "Eq.(3): sqrt(50 * 151.38) = " + fmt("%.4f", eq3.z_quarter) + " ohm (87.0 +- 0.1)");
    out.require(std::abs(eq3.z_half - 59.0) <= 0.1,
                "Eq.(4): pi/(2 * 0.026624) = " + fmt("%.4f", eq3.z_half) + " ohm (59.0 +- 0.1)");

    double worst = 0.0;
    for (double z_jpa : {50.0, 590.0, 828.93}) {
        const double x = pi * z_jpa / 2.0;
        const double back = section_impedances(x, 0.02, 50.0, 151.38, 6.4e9).z_jpa_target;
        worst = std::max(worst, std::abs(back - z_jpa) / z_jpa);
    }
    out.require(worst <= 1e-12,
                "Eq.(5) round trip worst relative error = " + fmt("%.2e", worst) + " (<= 1e-12)");
    return out;
}

Outcome gain_bandwidth() {
    Outcome out;
    DeviceDesign design = paper_design();
    design.pump_strength = calibrate_pump(design, 20.0, kBand);
    const GainProfile profile = gain_profile(design, kBand.lo, kBand.hi, 2001);

    const double bw = bandwidth(profile, 17.0);
    out.require(bw >= 150e6, "contiguous band above 17 dB = " + fmt("%.1f", bw * 1e-6) +
                                 " MHz (>= 150) at r_p = " + fmt("%.3f", design.pump_strength) +
                                 " ohm");
    int maxima = 0;
    for (size_t i = 1; i + 1 < profile.size(); ++i) {
        if (profile[i].gain_db >= 17.0 && profile[i].gain_db > profile[i - 1].gain_db &&
            profile[i].gain_db > profile[i + 1].gain_db) {
            ++maxima;
        }
    }
    out.require(maxima >= 2, "local maxima above 17 dB = " + std::to_string(maxima) + " (>= 2)");
    return out;
}

Outcome passivity_reciprocity() {
    Outcome out;
    const GainProfile profile = gain_profile(paper_design(), kBand.lo, kBand.hi, 2001);
    double worst_gamma = 0.0;
    for (const GainSample& sample : profile) {
        worst_gamma = std::max(worst_gamma, std::abs(std::abs(sample.reflection) - 1.0));
    }
    out.require(worst_gamma <= 1e-9,
                "pump-off max ||Gamma| - 1| = " + fmt("%.2e", worst_gamma) + " (<= 1e-9)");

    double worst_det = 0.0;
    for (int i = 0; i < 2001; ++i) {
        const double f = kBand.lo + (kBand.hi - kBand.lo) * i / 2000.0;
        const double ratio = f / 6.4e9;
        const std::array<TwoPortMatrix, 2> sections{
            line_matrix(87.0, 0.5 * pi * ratio), line_matrix(59.0, pi * ratio)};
        worst_det = std::max(worst_det, std::abs(determinant(cascade(sections)) - 1.0));
    }
    out.require(worst_det <= 1e-9,
                "max |det(cascade) - 1| = " + fmt("%.2e", worst_det) + " (<= 1e-9)");
    return out;
}

Outcome saturation_law() {
    Outcome out;
    out.require(saturation_scaling(2.0, 1.0) == 4.0, "(2,1) -> 4 exactly");
    out.require(saturation_scaling(1.0, 2.0) == 0.125, "(1,2) -> 0.125 exactly");
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(0.1, 10.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double a = dist(rng);
        const double b = dist(rng);
        const double c = dist(rng);
        const double d = dist(rng);
        const double joint = saturation_scaling(a * b, c * d);
        const double split = saturation_scaling(a, c) * saturation_scaling(b, d);
        worst = std::max(worst, std::abs(joint - split) / joint);
    }
    out.require(worst <= 1e-12, "multiplicativity worst relative error over 100 pairs = " +
                                    fmt("%.2e", worst) + " (<= 1e-12)");
    return out;
}

struct CliRun {
    int status;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(SNAILAMP_CLI_BINARY) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return {-1, {}};
    }
    std::string out;
    char buf[4096];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
        out.append(buf, n);
    }
    const int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome cli_determinism() {
    Outcome out;
    const std::string spec = std::string(SNAILAMP_DATA_DIR) + "/paper_device.json";
    const std::vector<std::pair<std::string, std::string>> commands{
        {"characterize", "characterize --spec " + spec + " --grid 101"},
        {"design", "design --spec " + spec},
        {"gain", "gain --spec " + spec + " --gain-db 20 --grid 201"},
        {"tune", "tune --spec " + spec + " --grid 101"},
        {"saturation", "saturation --ic-ratio 2 --q-ratio 1"},
    };
    for (const auto& [name, args] : commands) {
        const CliRun first = run_cli(args);
        const CliRun second = run_cli(args);
        out.require(first.status == 0 && second.status == 0 && !first.out.empty() &&
                        first.out == second.out,
                    name + " byte-identical across runs");
    }

    const std::string golden = std::string(SNAILAMP_FIXTURES_DIR) + "/golden";
    const std::vector<std::pair<std::string, std::string>> goldens{
        {"characterize_3pt.csv", "characterize --spec " + spec + " --grid 3"},
        {"design_default.json", "design --spec " + spec},
        {"tune_5pt.csv", "tune --spec " + spec + " --grid 5"},
        {"saturation_2_1.json", "saturation --ic-ratio 2 --q-ratio 1"},
        {"gain_33pt.txt", "gain --spec " + spec + " --rp-ohm 110 --grid 33"},
    };
    for (const auto& [file, args] : goldens) {
        const std::string expected = read_file(golden + "/" + file);
        const CliRun run = run_cli(args);
        out.require(!expected.empty() && run.status == 0 && run.out == expected,
                    "matches golden " + file);
    }
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "three-wave term forbidden at symmetric flux", 1.0, analytic_zeros},
        {2, "analytic derivatives vs finite differences", 1.0, derivative_cross_check},
        {3, "asymmetry raises the three-wave coupling", 1.0, asymmetry_trend},
        {4, "Kerr-free flux point exists and is located", 5.0, kerr_free_existence},
        {5, "tunable-range frequency model", 1.0, frequency_model},
        {6, "flux/frequency round-trip inversion", 1.0, round_trip_inversion},
        {7, "transformer section equations", 1.0, transformer_equations},
        {8, "calibrated 20 dB gain-bandwidth product", 10.0, gain_bandwidth},
        {9, "pump-off passivity and cascade reciprocity", 5.0, passivity_reciprocity},
        {10, "saturation power scaling law", 1.0, saturation_law},
        {11, "CLI determinism and golden files", 10.0, cli_determinism},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& err) {
            outcome.ok = false;
            outcome.detail = std::string("exception: ") + err.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = elapsed < criterion.budget_s;
        const bool ok = outcome.ok && in_budget;
        failures += ok ? 0 : 1;
        std::printf("%s  %2d  %-46s  %s [%.2f s / %g s]\n", ok ? "PASS" : "FAIL", criterion.id,
                    criterion.label, outcome.detail.c_str(), elapsed, criterion.budget_s);
        if (!in_budget) {
            std::printf("      %2d  runtime budget exceeded\n", criterion.id);
        }
    }
    return failures == 0 ? 0 : 1;
}

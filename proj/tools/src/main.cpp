#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "snailamp/errors.hpp"

namespace {

// 2 = input/validation failure, 1 = runtime/numerical failure.
int exit_code_for(snailamp::ErrorCode code) {
    switch (code) {
        case snailamp::ErrorCode::InvalidArgument:
        case snailamp::ErrorCode::InvalidOrder:
        case snailamp::ErrorCode::DegenerateCalibration:
            return 2;
        default:
            return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    using namespace snailamp::cli;

    CLI::App app{"Design and simulation toolkit for impedance-matched SNAIL parametric "
                 "amplifiers"};
    app.require_subcommand(1);

    CharacterizeOptions ch;
    CLI::App* characterize = app.add_subcommand(
        "characterize", "Sweep Taylor coefficients, nonlinearities and resonance over flux");
    characterize->add_option("--spec", ch.spec_path, "Device spec file")->required();
    characterize->add_option("--grid", ch.grid, "Number of flux grid points");
    characterize->add_option("--flux-min", ch.flux_min, "Lowest flux fraction");
    characterize->add_option("--flux-max", ch.flux_max, "Highest flux fraction");
    characterize->add_option("--out", ch.out_path, "CSV output path (default stdout)");
    characterize->add_option("--svg", ch.svg_path, "Optional SVG plot path");

    DesignOptions de;
    CLI::App* design =
        app.add_subcommand("design", "Synthesize the two-section impedance transformer");
    design->add_option("--spec", de.spec_path, "Device spec file")->required();
    design->add_option("--order", de.order, "Prototype order");
    design->add_option("--ripple-db", de.ripple_db, "Chebyshev passband ripple, dB");
    design->add_option("--fbw", de.fractional_bandwidth, "Fractional bandwidth w");
    design->add_option("--target-ghz", de.target_ghz,
                       "Operating frequency, GHz (default: spec center)");
    design->add_option("--out", de.out_path, "JSON output path (default stdout)");

    GainOptions ga;
    CLI::App* gain = app.add_subcommand("gain", "Simulate the pumped reflection gain profile");
    gain->add_option("--spec", ga.spec_path, "Device spec file")->required();
    CLI::Option* gain_db =
        gain->add_option("--gain-db", ga.gain_db, "Target peak gain to calibrate, dB");
    gain->add_option("--rp-ohm", ga.rp_ohm, "Pump negative resistance, ohm (skips calibration)")
        ->excludes(gain_db);
    gain->add_option("--threshold-db", ga.threshold_db, "Bandwidth threshold, dB");
    gain->add_option("--f-min-ghz", ga.f_min_ghz, "Sweep start, GHz (default center - 1)");
    gain->add_option("--f-max-ghz", ga.f_max_ghz, "Sweep stop, GHz (default center + 1)");
    gain->add_option("--grid", ga.grid, "Number of sweep points");
    gain->add_option("--out", ga.out_path, "CSV output path (default stdout)");
    gain->add_option("--summary", ga.summary_path, "JSON summary path (default stdout)");
    gain->add_option("--svg", ga.svg_path, "Optional SVG plot path");

    TuneOptions tu;
    CLI::App* tune = app.add_subcommand("tune", "Tabulate resonance frequency vs flux bias");
    tune->add_option("--spec", tu.spec_path, "Device spec file")->required();
    tune->add_option("--grid", tu.grid, "Number of flux grid points");
    tune->add_option("--flux-min", tu.flux_min, "Lowest flux fraction");
    tune->add_option("--flux-max", tu.flux_max, "Highest flux fraction");
    tune->add_option("--out", tu.out_path, "CSV output path (default stdout)");
    tune->add_option("--svg", tu.svg_path, "Optional SVG plot path");

    SaturationOptions sa;
    CLI::App* saturation =
        app.add_subcommand("saturation", "Saturation power scaling Ic^2/Q^3 between designs");
    saturation->add_option("--ic-ratio", sa.ic_ratio, "Critical current ratio")->required();
    saturation->add_option("--q-ratio", sa.q_ratio, "Quality factor ratio")->required();
    saturation->add_option("--out", sa.out_path, "JSON output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        std::cerr << "error: InvalidArgument: " << err.what() << "\n";
        return 2;
    }

    try {
        if (characterize->parsed()) {
            cmd_characterize(ch);
        } else if (design->parsed()) {
            cmd_design(de);
        } else if (gain->parsed()) {
            cmd_gain(ga);
        } else if (tune->parsed()) {
            cmd_tune(tu);
        } else if (saturation->parsed()) {
            cmd_saturation(sa);
        }
    } catch (const snailamp::Error& err) {
        std::cerr << "error: " << snailamp::to_string(err.code()) << ": " << err.what() << "\n";
        return exit_code_for(err.code());
    }
    return 0;
}

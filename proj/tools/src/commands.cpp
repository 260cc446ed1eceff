#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "device_spec.hpp"
#include "text_output.hpp"
#include "snailamp/constants.hpp"
#include "snailamp/errors.hpp"
#include "snailamp/network.hpp"
#include "snailamp/snail_cell.hpp"

namespace snailamp::cli {

namespace {

std::vector<double> flux_grid(int points, double flux_min, double flux_max) {
    if (points < 1) {
        throw Error(ErrorCode::InvalidArgument, "empty grid");
    }
    if (flux_min > flux_max || flux_min < -0.5 || flux_max > 0.5) {
        throw Error(ErrorCode::InvalidArgument,
                    "flux grid must satisfy -0.5 <= min <= max <= 0.5");
    }
    std::vector<double> grid(points);
    if (points == 1) {
        grid[0] = flux_min;
        return grid;
    }
    const double step = (flux_max - flux_min) / (points - 1);
    for (int i = 0; i < points; ++i) {
        grid[i] = flux_min + step * i;
    }
    return grid;
}

/// Amplifier model implied by a spec file: flux tuned so the array resonates
/// at the transformer center, slope parameters recovered from the printed
/// section impedances.
DeviceDesign build_amplifier(const DeviceSpecFile& spec) {
    const double frac = flux_for_frequency(spec.array, spec.center_frequency);
    const FluxBias flux = FluxBias::from_fraction(frac);
    const double z_jpa = characteristic_impedance(spec.array, flux);
    const TransformerDesign transformer{spec.z_quarter,
                                        spec.z_half,
                                        z_jpa,
                                        constants::pi * z_jpa / 2.0,
                                        constants::pi / (2.0 * spec.z_half),
                                        spec.center_frequency};
    return {transformer, spec.array, flux, spec.source_impedance, 0.0, 0.0};
}

std::string dump_json(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

void cmd_characterize(const CharacterizeOptions& opt) {
    const DeviceSpecFile spec = load_device_spec(opt.spec_path);
    const std::vector<double> grid = flux_grid(opt.grid, opt.flux_min, opt.flux_max);

    Table table;
    table.header = {"flux_fraction", "phi_min_rad", "c2", "c3", "c4",
                    "g3_Hz",         "g4_Hz",       "L_s_pH", "f0_GHz"};
    Series plot{{}, {}, "flux_fraction", "f0_GHz"};
    for (double frac : grid) {
        try {
            const FluxBias flux = FluxBias::from_fraction(frac);
            const TaylorCoefficients t = taylor_coefficients(flux, spec.array.cell);
            const GCoefficients g = g_coefficients(flux, spec.array.cell, spec.array.m_snails,
                                                   spec.array.capacitance);
            const double l_s = cell_inductance(flux, spec.array.cell);
            const double f0 = resonance_frequency(spec.array, flux);
            table.rows.push_back({frac, t.phi_min, t.c2, t.c3, t.c4, g.g3, g.g4, l_s * 1e12,
                                  f0 * 1e-9});
            plot.x.push_back(frac);
            plot.y.push_back(f0 * 1e-9);
        } catch (const Error& err) {
            std::ostringstream msg;
            msg << err.what() << " (flux fraction " << format_number(frac) << ")";
            throw Error(err.code(), msg.str(), err.payload());
        }
    }
    write_text(opt.out_path, render_csv(table));
    if (!opt.svg_path.empty()) {
        write_text(opt.svg_path, render_svg(plot));
    }
}

void cmd_design(const DesignOptions& opt) {
    const DeviceSpecFile spec = load_device_spec(opt.spec_path);
    const double target =
        opt.target_ghz > 0.0 ? opt.target_ghz * 1e9 : spec.center_frequency;

    const double frac = flux_for_frequency(spec.array, target);
    const FluxBias flux = FluxBias::from_fraction(frac);
    const PrototypeSpec proto = make_prototype(opt.order, opt.ripple_db,
                                               opt.fractional_bandwidth, target,
                                               spec.source_impedance);
    const TransformerDesign design = synthesize(proto, spec.array, flux);
    const double l_array = array_inductance(spec.array, flux);

    nlohmann::json doc;
    doc["b_slope_S"] = design.b_slope;
    doc["center_frequency_GHz"] = design.center_frequency * 1e-9;
    doc["center_frequency_Hz"] = design.center_frequency;
    doc["fractional_bandwidth"] = proto.fractional_bandwidth;
    doc["l_array_H"] = l_array;
    doc["l_array_nH"] = l_array * 1e9;
    doc["operating_flux_fraction"] = frac;
    doc["order"] = proto.order;
    doc["ripple_db"] = proto.ripple_db;
    doc["source_impedance_ohm"] = proto.source_impedance;
    doc["x_slope_ohm"] = design.x_slope;
    doc["z_half_ohm"] = design.z_half;
    doc["z_jpa_ohm"] = design.z_jpa_target;
    doc["z_quarter_ohm"] = design.z_quarter;
    write_text(opt.out_path, dump_json(doc));
}

void cmd_gain(const GainOptions& opt) {
    if (opt.grid < 2) {
        throw Error(ErrorCode::InvalidArgument, "gain sweep needs at least two grid points");
    }
    const DeviceSpecFile spec = load_device_spec(opt.spec_path);
    DeviceDesign device = build_amplifier(spec);

    const double f_lo = opt.f_min_ghz > 0.0 ? opt.f_min_ghz * 1e9
                                            : spec.center_frequency - kDefaultGainHalfSpan;
    const double f_hi = opt.f_max_ghz > 0.0 ? opt.f_max_ghz * 1e9
                                            : spec.center_frequency + kDefaultGainHalfSpan;
    if (!(f_lo > 0.0) || !(f_lo < f_hi)) {
        throw Error(ErrorCode::InvalidArgument, "gain band must satisfy 0 < f_min < f_max");
    }
    const FrequencyBand band{f_lo, f_hi};
    device.pump_strength =
        opt.rp_ohm >= 0.0 ? opt.rp_ohm : calibrate_pump(device, opt.gain_db, band);

    const GainProfile profile = gain_profile(device, band.lo, band.hi, opt.grid);

    Table table;
    table.header = {"frequency_GHz", "gain_dB", "re_gamma", "im_gamma"};
    Series plot{{}, {}, "frequency_GHz", "gain_dB"};
    const GainSample* peak = &profile.front();
    for (const GainSample& s : profile) {
        table.rows.push_back({s.frequency * 1e-9, s.gain_db, s.reflection.real(),
                              s.reflection.imag()});
        plot.x.push_back(s.frequency * 1e-9);
        plot.y.push_back(s.gain_db);
        if (s.gain_db > peak->gain_db) {
            peak = &s;
        }
    }
    const double bw = bandwidth(profile, opt.threshold_db);

    nlohmann::json summary;
    summary["bandwidth_Hz"] = bw;
    summary["bandwidth_MHz"] = bw * 1e-6;
    summary["peak_frequency_GHz"] = peak->frequency * 1e-9;
    summary["peak_frequency_Hz"] = peak->frequency;
    summary["peak_gain_db"] = peak->gain_db;
    summary["pump_rp_ohm"] = device.pump_strength;
    summary["threshold_db"] = opt.threshold_db;

    write_text(opt.out_path, render_csv(table));
    write_text(opt.summary_path, dump_json(summary));
    if (!opt.svg_path.empty()) {
        write_text(opt.svg_path, render_svg(plot));
    }
}

void cmd_tune(const TuneOptions& opt) {
    const DeviceSpecFile spec = load_device_spec(opt.spec_path);
    const std::vector<double> grid = flux_grid(opt.grid, opt.flux_min, opt.flux_max);
    const TunabilityCurve curve = tunability_curve(spec.array, grid);

    Table table;
    Series plot{{}, {}, "flux_fraction", "f0_GHz"};
    const bool with_coil = spec.coil.has_value();
    table.header = with_coil
                       ? std::vector<std::string>{"flux_fraction", "coil_current_mA", "f0_GHz"}
                       : std::vector<std::string>{"flux_fraction", "f0_GHz"};
    for (const TunabilityPoint& point : curve) {
        std::vector<double> row{point.flux_fraction};
        if (with_coil) {
            row.push_back(flux_to_coil_current(*spec.coil, point.flux_fraction) * 1e3);
        }
        row.push_back(point.frequency * 1e-9);
        table.rows.push_back(std::move(row));
        plot.x.push_back(point.flux_fraction);
        plot.y.push_back(point.frequency * 1e-9);
    }
    write_text(opt.out_path, render_csv(table));
    if (!opt.svg_path.empty()) {
        write_text(opt.svg_path, render_svg(plot));
    }
}

void cmd_saturation(const SaturationOptions& opt) {
    const double ratio = saturation_scaling(opt.ic_ratio, opt.q_ratio);
    nlohmann::json doc;
    doc["power_ratio"] = ratio;
    doc["power_ratio_db"] = 10.0 * std::log10(ratio);
    write_text(opt.out_path, dump_json(doc));
}

}  // namespace snailamp::cli

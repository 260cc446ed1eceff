#pragma once

#include <string>

namespace snailamp::cli {

struct CharacterizeOptions {
    std::string spec_path;
    int grid = 101;
    double flux_min = 0.0;
    double flux_max = 0.5;
    std::string out_path;
    std::string svg_path;
};

struct DesignOptions {
    std::string spec_path;
    int order = 2;
    double ripple_db = 0.6;
    double fractional_bandwidth = 0.175;
    double target_ghz = 0.0;  // 0 = spec file center frequency
    std::string out_path;
};

struct GainOptions {
    std::string spec_path;
    double gain_db = 20.0;
    double rp_ohm = -1.0;  // >= 0 overrides calibration
    double threshold_db = 17.0;
    double f_min_ghz = 0.0;  // 0 = center - 1 GHz
    double f_max_ghz = 0.0;  // 0 = center + 1 GHz
    int grid = 2001;
    std::string out_path;
    std::string summary_path;
    std::string svg_path;
};

struct TuneOptions {
    std::string spec_path;
    int grid = 101;
    double flux_min = 0.0;
    double flux_max = 0.5;
    std::string out_path;
    std::string svg_path;
};

struct SaturationOptions {
    double ic_ratio = 1.0;
    double q_ratio = 1.0;
    std::string out_path;
};

void cmd_characterize(const CharacterizeOptions& opt);
void cmd_design(const DesignOptions& opt);
void cmd_gain(const GainOptions& opt);
void cmd_tune(const TuneOptions& opt);
void cmd_saturation(const SaturationOptions& opt);

}  // namespace snailamp::cli

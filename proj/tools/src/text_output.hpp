#pragma once

#include <string>
#include <vector>

namespace snailamp::cli {

/// 12-significant-digit rendering shared by every emitter, so reruns are
/// byte-identical.
std::string format_number(double value);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Comma separated, header row, LF endings, no trailing delimiter.
std::string render_csv(const Table& table);

struct Series {
    std::vector<double> x;
    std::vector<double> y;
    std::string x_label;
    std::string y_label;
};

/// Minimal deterministic polyline plot of one series.
std::string render_svg(const Series& series);

/// Writes to `path`, or to standard output when `path` is empty.
void write_text(const std::string& path, const std::string& content);

}  // namespace snailamp::cli

#include "text_output.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "snailamp/errors.hpp"

namespace snailamp::cli {

std::string format_number(double value) {
    if (value == 0.0) {
        value = 0.0;  // strip the sign off negative zero
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::string render_csv(const Table& table) {
    std::ostringstream out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        out << (i ? "," : "") << table.header[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << format_number(row[i]);
        }
        out << '\n';
    }
    return out.str();
}

namespace {

std::string px(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return buf;
}

std::string axis_value(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

}  // namespace

std::string render_svg(const Series& series) {
    constexpr double kWidth = 800.0;
    constexpr double kHeight = 500.0;
    constexpr double kLeft = 70.0;
    constexpr double kRight = 780.0;
    constexpr double kTop = 20.0;
    constexpr double kBottom = 450.0;

    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    if (!series.x.empty()) {
        const auto [xa, xb] = std::minmax_element(series.x.begin(), series.x.end());
        const auto [ya, yb] = std::minmax_element(series.y.begin(), series.y.end());
        x_min = *xa;
        x_max = *xb;
        y_min = *ya;
        y_max = *yb;
    }
    const double x_span = x_max > x_min ? x_max - x_min : 1.0;
    const double y_span = y_max > y_min ? y_max - y_min : 1.0;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kWidth << ' '
        << kHeight << "\">\n";
    out << "  <rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kRight - kLeft
        << "\" height=\"" << kBottom - kTop
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    if (!series.x.empty()) {
        out << "  <polyline fill=\"none\" stroke=\"#1f4e8c\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < series.x.size(); ++i) {
            const double xp = kLeft + (series.x[i] - x_min) / x_span * (kRight - kLeft);
            const double yp = kTop + (y_max - series.y[i]) / y_span * (kBottom - kTop);
            out << (i ? " " : "") << px(xp) << ',' << px(yp);
        }
        out << "\"/>\n";
    }
    out << "  <text x=\"" << kLeft << "\" y=\"470\" font-size=\"13\">" << axis_value(x_min)
        << "</text>\n";
    out << "  <text x=\"" << kRight << "\" y=\"470\" font-size=\"13\" text-anchor=\"end\">"
        << axis_value(x_max) << "</text>\n";
    out << "  <text x=\"" << kLeft - 6.0 << "\" y=\"" << kBottom
        << "\" font-size=\"13\" text-anchor=\"end\">" << axis_value(y_min) << "</text>\n";
    out << "  <text x=\"" << kLeft - 6.0 << "\" y=\"" << kTop + 12.0
        << "\" font-size=\"13\" text-anchor=\"end\">" << axis_value(y_max) << "</text>\n";
    out << "  <text x=\"" << 0.5 * (kLeft + kRight)
        << "\" y=\"490\" font-size=\"14\" text-anchor=\"middle\">" << series.x_label
        << "</text>\n";
    out << "  <text x=\"16\" y=\"" << 0.5 * (kTop + kBottom)
        << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << 0.5 * (kTop + kBottom) << ")\">" << series.y_label << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

void write_text(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::InvalidArgument, "cannot open output file " + path);
    }
    out << content;
}

}  // namespace snailamp::cli

#include "svid_tools/plot.hpp"

#include "svid/scores.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <ostream>

namespace svid::cli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kMargin = 56.0;
constexpr std::array<const char*, 6> kColors = {"#1f77b4", "#d62728", "#2ca02c",
                                                 "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double x) {
    return format_real(static_cast<double>(static_cast<long long>(x * 100.0)) / 100.0);
}

} // namespace

void write_svg_chart(const std::vector<Series>& series, const std::string& x_label,
                     const std::string& y_label, std::ostream& out) {
    double x_min = std::numeric_limits<double>::max();
    double x_max = std::numeric_limits<double>::lowest();
    double y_max = 0.0;
    for (const auto& s : series) {
        for (auto [x, y] : s.points) {
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_max = std::max(y_max, y);
        }
    }
    if (x_min > x_max) {
        x_min = 0.0;
        x_max = 1.0;
    }
    if (x_max == x_min) x_max = x_min + 1.0;
    if (y_max <= 0.0) y_max = 1.0;

    const double plot_w = kWidth - 2 * kMargin;
    const double plot_h = kHeight - 2 * kMargin;
    auto px = [&](double x) { return kMargin + (x - x_min) / (x_max - x_min) * plot_w; };
    auto py = [&](double y) { return kHeight - kMargin - y / y_max * plot_h; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\""
        << kWidth - kMargin << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin
        << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 16
        << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
    out << "<text x=\"16\" y=\"" << kHeight / 2 << "\" transform=\"rotate(-90 16 " << kHeight / 2
        << ")\" text-anchor=\"middle\">" << y_label << "</text>\n";
    out << "<text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin + 16
        << "\" text-anchor=\"middle\">" << num(x_min) << "</text>\n";
    out << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - kMargin + 16
        << "\" text-anchor=\"middle\">" << num(x_max) << "</text>\n";
    out << "<text x=\"" << kMargin - 6 << "\" y=\"" << kMargin + 4 << "\" text-anchor=\"end\">"
        << num(y_max) << "</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const char* color = kColors[k % kColors.size()];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
        for (auto [x, y] : series[k].points) {
            out << format_real(px(x)) << ',' << format_real(py(y)) << ' ';
        }
        out << "\"/>\n";
        out << "<text x=\"" << kWidth - kMargin - 4 << "\" y=\"" << kMargin + 16.0 * k
            << "\" text-anchor=\"end\" fill=\"" << color << "\">" << series[k].name
            << "</text>\n";
    }
    out << "</svg>\n";
}

} // namespace svid::cli

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace svid::cli {

struct Series {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

/// Minimal SVG line chart: axes, one polyline per series, a legend.
void write_svg_chart(const std::vector<Series>& series, const std::string& x_label,
                     const std::string& y_label, std::ostream& out);

} // namespace svid::cli

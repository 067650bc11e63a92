#pragma once

#include <string>
#include <vector>

namespace topoctl {

struct SvgSeries {
    std::string name;
    std::vector<double> x, y;
};

// Minimal deterministic line chart (axes, ticks, legend). CSV stays the
// canonical output; this is a convenience view.
std::string svg_line_chart(const std::string& title, const std::string& xlabel,
                           const std::string& ylabel,
                           const std::vector<SvgSeries>& series, int width = 960,
                           int height = 540);

}  // namespace topoctl

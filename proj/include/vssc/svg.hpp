#ifndef VSSC_SVG_HPP
#define VSSC_SVG_HPP

#include <string>
#include <vector>

namespace vssc {

/** Minimal self-contained line plot: one polyline per series, log-y optional,
 * the raw data embedded as XML comments so the file is inspectable without
 * extra tooling. */
struct SvgSeries {
    std::string name;
    std::vector<double> t;
    std::vector<double> y;
};

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::vector<SvgSeries>& series, bool log_y = false);

} // namespace vssc

#endif

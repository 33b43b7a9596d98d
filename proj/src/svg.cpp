#include "vssc/svg.hpp"

#include "vssc/csvio.hpp"
#include "vssc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace vssc {

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::vector<SvgSeries>& series, bool log_y) {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw Error("cannot open SVG for writing: " + path);
    const int W = 860, H = 480, ML = 70, MR = 20, MT = 40, MB = 50;

    double tmin = 0, tmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.t.size(); ++i) {
            double y = s.y[i];
            if (log_y) {
                if (!(y > 0.0)) continue;
                y = std::log10(y);
            }
            if (!std::isfinite(y)) continue;
            if (first) {
                tmin = tmax = s.t[i];
                ymin = ymax = y;
                first = false;
            } else {
                tmin = std::min(tmin, s.t[i]);
                tmax = std::max(tmax, s.t[i]);
                ymin = std::min(ymin, y);
                ymax = std::max(ymax, y);
            }
        }
    if (tmax == tmin) tmax = tmin + 1;
    if (ymax == ymin) ymax = ymin + 1;

    auto px = [&](double t) { return ML + (t - tmin) / (tmax - tmin) * (W - ML - MR); };
    auto py = [&](double y) { return H - MB - (y - ymin) / (ymax - ymin) * (H - MT - MB); };

    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\""
       << H << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
       << title << (log_y ? " (log10 y)" : "") << "</text>\n";
    os << "<line x1=\"" << ML << "\" y1=\"" << H - MB << "\" x2=\"" << W - MR
       << "\" y2=\"" << H - MB << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ML << "\" y1=\"" << MT << "\" x2=\"" << ML << "\" y2=\""
       << H - MB << "\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double t = tmin + (tmax - tmin) * k / 4;
        const double y = ymin + (ymax - ymin) * k / 4;
        os << "<text x=\"" << px(t) << "\" y=\"" << H - MB + 18
           << "\" text-anchor=\"middle\" font-size=\"11\">" << format_double(t)
           << "</text>\n";
        os << "<text x=\"" << ML - 6 << "\" y=\"" << py(y) + 4
           << "\" text-anchor=\"end\" font-size=\"11\">" << format_double(y)
           << "</text>\n";
    }
    int ci = 0;
    for (const auto& s : series) {
        os << "<!-- data " << s.name << ":";
        for (std::size_t i = 0; i < s.t.size(); ++i)
            os << " " << format_double(s.t[i]) << "," << format_double(s.y[i]);
        os << " -->\n";
        os << "<polyline fill=\"none\" stroke=\"" << colors[ci % 5]
           << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.t.size(); ++i) {
            double y = s.y[i];
            if (log_y) {
                if (!(y > 0.0)) continue;
                y = std::log10(y);
            }
            if (!std::isfinite(y)) continue;
            os << px(s.t[i]) << "," << py(y) << " ";
        }
        os << "\"/>\n";
        os << "<text x=\"" << W - MR - 8 << "\" y=\"" << MT + 16 * (ci + 1)
           << "\" text-anchor=\"end\" font-size=\"12\" fill=\"" << colors[ci % 5]
           << "\">" << s.name << "</text>\n";
        ++ci;
    }
    os << "</svg>\n";
}

} // namespace vssc

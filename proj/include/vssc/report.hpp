#ifndef VSSC_REPORT_HPP
#define VSSC_REPORT_HPP

#include <string>
#include <vector>

namespace vssc {

/** One sampled row of the growth report. */
struct GrowthSample {
    double t = 0.0;
    double grad_sup = 0.0;
    double eta1 = 0.0;        // x1 of the canonical boundary tracer
    double a = 0.0;           // bracket positions
    double b = 0.0;
    double log_b_over_a = 0.0;
    double kinetic = 0.0;
    double l1 = 0.0, l2 = 0.0, l4 = 0.0, linf = 0.0;
    double parity_violation = 0.0;   // max since previous sample, pre-symmetrization
    double exceptional_area = 0.0;   // |{x in Omega+ : |omega - eps| > tol*eps}|
    long trapezoid_cells = 0;
    long trapezoid_violations = 0;
    double sector_min_ratio = 0.0;   // min of -u1/x1 over B_delta sector
    double cfl = 0.0;
};

struct GrowthReport {
    double epsilon = 0.0;
    double stencil = 0.0;  // gradient stencil width (2h)
    std::vector<GrowthSample> samples;
};

/** CSV body shared by run/analyze outputs; header comments carry the config
 * hash and build id so reruns are byte-comparable. */
void write_growth_csv(const std::string& path, const GrowthReport& r,
                      const std::string& config_hash, const std::string& build_id);
GrowthReport read_growth_csv(const std::string& path);

} // namespace vssc

#endif

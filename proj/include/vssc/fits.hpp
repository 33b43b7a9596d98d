#ifndef VSSC_FITS_HPP
#define VSSC_FITS_HPP

#include "vssc/report.hpp"

#include <array>
#include <string>
#include <vector>

namespace vssc {

enum class FitModel { Exponential, DoubleExponential, Linear };

struct FitResult {
    FitModel model = FitModel::Linear;
    double rate = 0.0;        // slope of the linearized fit
    double prefactor = 0.0;   // exp(intercept)
    double rate_ci = 0.0;     // 1.96 * standard error of the slope
    double residual = 0.0;    // rms residual of the linearized fit
    std::array<double, 2> window{};  // [t0, t1] actually used
    int n = 0;
};

/** Least squares y = a + b t with slope CI and rms residual. */
FitResult linear_fit(const std::vector<double>& t, const std::vector<double>& y);

struct GrowthFit {
    FitResult exponential;         // log sup|grad omega| vs t
    FitResult double_exponential;  // log log(sup|grad omega| / eps) vs t
    bool exp_rate_ok = false;      // fitted rate >= 0.9 eps on the window
};

/** Fit both growth models on the sample window [t0, t1].
 * Throws InsufficientSamples (< 10 points) or NonPositiveNorm. */
GrowthFit growth_fit(const GrowthReport& report, double eps, double t0, double t1);

struct DiffIneqAudit {
    double C4_fit = 0.0;          // smallest C4 >= 0 making the inequality hold
    double floor_margin = 0.0;    // min over samples of (measured - implied floor)
    bool floor_respected = false;
    FitResult regression;         // d/dt log(b/a) vs (eps/pi) log(b/a)
    int n = 0;
};

/** Differential-inequality audit of d/dt log(b/a) >= eps((1/pi)log(b/a) - C4)
 * over the report's bracket history. Requires >= 10 samples. */
DiffIneqAudit diffineq_audit(const GrowthReport& report, double eps);
DiffIneqAudit diffineq_audit(const std::vector<double>& t,
                             const std::vector<double>& logba, double eps);

struct DriftRow {
    std::string quantity;
    double initial = 0.0;
    double max_drift = 0.0;  // max_t |X(t) - X(0)| / |X(0)|
};

/** Relative drifts of the conserved quantities across the run. */
std::vector<DriftRow> conservation_audit(const GrowthReport& report);

} // namespace vssc

#endif

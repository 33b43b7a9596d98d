#include "vssc/fits.hpp"

#include "vssc/errors.hpp"

#include <algorithm>
#include <cmath>

namespace vssc {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

FitResult linear_fit(const std::vector<double>& t, const std::vector<double>& y) {
    const int n = static_cast<int>(t.size());
    if (n < 2) throw InsufficientSamples("linear_fit: need >= 2 points");
    double st = 0, sy = 0;
    for (int i = 0; i < n; ++i) {
        st += t[i];
        sy += y[i];
    }
    const double mt = st / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        sxx += (t[i] - mt) * (t[i] - mt);
        sxy += (t[i] - mt) * (y[i] - my);
    }
    if (sxx == 0.0) throw InsufficientSamples("linear_fit: degenerate abscissae");
    FitResult r;
    r.model = FitModel::Linear;
    r.rate = sxy / sxx;
    const double icpt = my - r.rate * mt;
    r.prefactor = std::exp(icpt);
    double ss = 0;
    for (int i = 0; i < n; ++i) {
        const double e = y[i] - (icpt + r.rate * t[i]);
        ss += e * e;
    }
    r.residual = std::sqrt(ss / n);
    r.rate_ci = n > 2 ? 1.96 * std::sqrt(ss / (n - 2) / sxx) : 0.0;
    r.window = {t.front(), t.back()};
    r.n = n;
    return r;
}

GrowthFit growth_fit(const GrowthReport& report, double eps, double t0, double t1) {
    std::vector<double> t, lg, llg;
    for (const auto& s : report.samples) {
        if (s.t < t0 || s.t > t1) continue;
        if (!(s.grad_sup > 0.0)) throw NonPositiveNorm("growth_fit: sup|grad omega| <= 0");
        t.push_back(s.t);
        lg.push_back(std::log(s.grad_sup));
        const double ratio = s.grad_sup / eps;
        llg.push_back(ratio > 1.0 ? std::log(std::log(ratio)) : std::nan(""));
    }
    if (t.size() < 10) throw InsufficientSamples("growth_fit: need >= 10 samples in window");

    GrowthFit g;
    g.exponential = linear_fit(t, lg);
    g.exponential.model = FitModel::Exponential;

    std::vector<double> t2, y2;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (std::isfinite(llg[i])) {
            t2.push_back(t[i]);
            y2.push_back(llg[i]);
        }
    if (t2.size() >= 2) {
        g.double_exponential = linear_fit(t2, y2);
        g.double_exponential.model = FitModel::DoubleExponential;
    }
    g.exp_rate_ok = g.exponential.rate >= 0.9 * eps;
    return g;
}

DiffIneqAudit diffineq_audit(const std::vector<double>& t,
                             const std::vector<double>& logba, double eps) {
    const int n = static_cast<int>(t.size());
    if (n < 10) throw InsufficientSamples("diffineq_audit: need >= 10 samples");

    // centered d/dt in the interior, one-sided at the ends
    std::vector<double> dldt(n);
    for (int i = 0; i < n; ++i) {
        if (i == 0)
            dldt[i] = (logba[1] - logba[0]) / (t[1] - t[0]);
        else if (i == n - 1)
            dldt[i] = (logba[n - 1] - logba[n - 2]) / (t[n - 1] - t[n - 2]);
        else
            dldt[i] = (logba[i + 1] - logba[i - 1]) / (t[i + 1] - t[i - 1]);
    }

    DiffIneqAudit a;
    a.n = n;
    // smallest C4 >= 0 with dL/dt >= eps((1/pi) L - C4) at every sample
    double c4 = 0.0;
    for (int i = 0; i < n; ++i)
        c4 = std::max(c4, logba[i] / kPi - dldt[i] / eps);
    a.C4_fit = c4;

    // implied floor exp(eps t / pi)(L(0) - pi C4)
    const double L0 = logba[0];
    double margin = 0.0;
    bool first = true;
    for (int i = 0; i < n; ++i) {
        const double floor = std::exp(eps * (t[i] - t[0]) / kPi) * (L0 - kPi * c4);
        const double m = logba[i] - floor;
        if (first || m < margin) margin = m;
        first = false;
    }
    a.floor_margin = margin;
    a.floor_respected = margin >= -1e-9;

    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = eps / kPi * logba[i];
    a.regression = linear_fit(x, dldt);
    return a;
}

DiffIneqAudit diffineq_audit(const GrowthReport& report, double eps) {
    std::vector<double> t, l;
    for (const auto& s : report.samples) {
        t.push_back(s.t);
        l.push_back(s.log_b_over_a);
    }
    return diffineq_audit(t, l, eps);
}

std::vector<DriftRow> conservation_audit(const GrowthReport& report) {
    std::vector<DriftRow> rows;
    if (report.samples.size() < 2) return rows;
    auto add = [&](const std::string& name, auto getter) {
        DriftRow r;
        r.quantity = name;
        r.initial = getter(report.samples.front());
        double worst = 0.0;
        for (const auto& s : report.samples)
            if (r.initial != 0.0)
                worst = std::max(worst, std::fabs(getter(s) - r.initial) / std::fabs(r.initial));
        r.max_drift = worst;
        rows.push_back(r);
    };
    add("l1", [](const GrowthSample& s) { return s.l1; });
    add("l2", [](const GrowthSample& s) { return s.l2; });
    add("l4", [](const GrowthSample& s) { return s.l4; });
    add("linf", [](const GrowthSample& s) { return s.linf; });
    add("K", [](const GrowthSample& s) { return s.kinetic; });
    return rows;
}

} // namespace vssc

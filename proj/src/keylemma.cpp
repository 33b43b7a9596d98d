#include "vssc/keylemma.hpp"

#include "vssc/errors.hpp"

#include <algorithm>
#include <cmath>

namespace vssc {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double q_integral(const ScalarField& omega, std::array<double, 2> x) {
    if (2.0 * x[0] >= 1.0 || 2.0 * x[1] >= 1.0)
        throw EmptyBox("Q(2x) is empty: need 2x_i < 1");
    const TorusGrid& g = omega.grid();
    const double cell = g.h1() * g.h2();
    const double lo1 = 2.0 * x[0], lo2 = 2.0 * x[1];
    double s = 0.0;
    for (int j = 0; j < g.rows(); ++j) {
        const double y2 = g.x2(j);
        if (y2 < lo2 || y2 > 1.0) continue;
        for (int i = 0; i < g.n1(); ++i) {
            const double y1 = g.x1(i);
            if (y1 < lo1 || y1 > 1.0) continue;
            const double r2 = y1 * y1 + y2 * y2;
            if (r2 == 0.0) continue;
            s += y1 * y2 / (r2 * r2) * omega.at(i, j);
        }
    }
    return s * cell;
}

double sector_floor(double eps, double delta) {
    return eps * kPi / 48.0 * (std::log(1.0 / delta) - 2.0 * std::log(4.0));
}

KeyLemmaSample extract_B(const ScalarField& omega, const VectorField& u,
                         std::array<double, 2> x, int j) {
    const TorusGrid& g = omega.grid();
    const double h = j == 1 ? g.h1() : g.h2();
    const double xj = j == 1 ? x[0] : x[1];
    if (xj < 2.0 * h) throw DegeneratePoint("x_j under 2h");

    // sample u_j at the nearest grid point of x
    const int i = static_cast<int>(std::lround((x[0] + 1.0) / g.h1())) % g.n1();
    const int r = static_cast<int>(std::lround(x[1] / g.h2()));
    const ScalarField& comp = j == 1 ? u.c1 : u.c2;

    KeyLemmaSample s;
    s.x = {g.x1(i), g.x2(r)};
    s.j = j;
    s.u_j = comp.at(i, r);
    s.q = q_integral(omega, s.x);
    const double sign = j == 1 ? -1.0 : 1.0;  // (-1)^j
    const double xs = j == 1 ? s.x[0] : s.x[1];
    s.B = sign * (kPi / 4.0) * s.u_j / xs - s.q;
    const double other = j == 1 ? s.x[1] : s.x[0];
    s.log_factor = 1.0 + std::log(1.0 + other / xs);
    return s;
}

double fit_remainder_constant(std::vector<KeyLemmaSample>& samples, double K0,
                              double omega_sup) {
    if (samples.size() < 20) throw InsufficientSamples("need at least 20 samples");
    double rmin = 0.0, rmax = 0.0;
    bool first = true;
    for (const auto& s : samples) {
        const double ratio = s.x[1] / s.x[0];
        if (first) {
            rmin = rmax = ratio;
            first = false;
        } else {
            rmin = std::min(rmin, ratio);
            rmax = std::max(rmax, ratio);
        }
    }
    if (rmin <= 0.0 || rmax / rmin < 10.0)
        throw InsufficientSamples("samples must span a decade in x2/x1");
    double C0 = 0.0;
    const double sk = std::sqrt(K0);
    for (const auto& s : samples)
        C0 = std::max(C0, std::fabs(s.B) / (omega_sup * s.log_factor + sk));
    for (auto& s : samples) s.bound_rhs = C0 * (omega_sup * s.log_factor + sk);
    return C0;
}

double c3_constant(int grid_points) {
    // I(a) = integral_{2a}^{1} y1 [ (1/2)(1/y1^2 - 1/(y1^2+4a^2)) ] dy1
    //      = (1/2) [ ln y1 - (1/2) ln(y1^2 + 4a^2) ] from 2a to 1
    double best = 0.0;
    for (int k = 1; k <= grid_points; ++k) {
        const double a = 0.5 * k / (grid_points + 1);
        if (2.0 * a >= 1.0) break;
        auto F = [&](double y) { return std::log(y) - 0.5 * std::log(y * y + 4 * a * a); };
        best = std::max(best, 0.5 * (F(1.0) - F(2.0 * a)));
    }
    return best;
}

} // namespace vssc

#include "vssc/profile.hpp"

#include <cmath>

namespace vssc {

double ProfileSpec::kappa_m() const { return std::pow(kappa, m); }

void ProfileSpec::require_valid() const {
    if (!(0.0 < kappa && kappa < delta && delta < 0.5))
        throw InvalidSpec("profile requires 0 < kappa < delta < 1/2");
    if (m < 1) throw InvalidSpec("profile exponent m must be positive");
    if (kappa_m() >= 1.0 - delta) throw InvalidSpec("kappa^m < 1 - delta required");
    if (taper_x2 < 0.0 || taper_x2 > 0.25) throw InvalidSpec("taper_x2 must lie in [0, 1/4]");
}

double smooth_step(double s) {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / s);
    const double b = std::exp(-1.0 / (1.0 - s));
    return a / (a + b);
}

namespace {

double half_profile(const ProfileSpec& sp, double x1, double x2) {
    // x1 in (0, 1): rise on [km/4, km], fall on [1 - delta, 1 - delta/4]
    const double km = sp.kappa_m();
    const double rise = smooth_step((x1 - km / 4) / (km - km / 4));
    const double fall = smooth_step((1.0 - sp.delta / 4 - x1) / (0.75 * sp.delta));
    double t = 1.0;
    if (sp.taper_x2 > 0.0) t = smooth_step((1.0 - x2) / sp.taper_x2);
    return rise * fall * t;
}

} // namespace

ScalarField build_profile(const ProfileSpec& spec, const TorusGrid& strip_grid) {
    spec.require_valid();
    if (strip_grid.kind() != Domain::Strip)
        throw GridMismatch("build_profile: strip grid expected");
    const double km = spec.kappa_m();
    if ((1.0 - spec.delta - km) / strip_grid.h1() < 4.0)
        throw InvalidSpec("plateau [kappa^m, 1-delta] under 4 cells at this resolution");

    ScalarField f(strip_grid, ParityClass{Parity::Odd, Parity::None});
    const int n1 = strip_grid.n1(), R = strip_grid.rows();
    for (int j = 0; j < R; ++j) {
        const double x2 = strip_grid.x2(j);
        for (int i = n1 / 2 + 1; i < n1; ++i) {
            const double v = half_profile(spec, strip_grid.x1(i), x2);
            f.at(i, j) = v;
            f.at(strip_grid.mirror1(i), j) = -v;  // bitwise odd reflection
        }
        f.at(strip_grid.axis_col(), j) = 0.0;
        f.at(0, j) = 0.0;
    }
    return f;
}

double profile_exceptional_area(const ScalarField& f, double tol) {
    const TorusGrid& g = f.grid();
    const double cell = g.h1() * g.h2();
    long count = 0;
    for (int j = 0; j < g.rows(); ++j)
        for (int i = g.axis_col(); i < g.n1(); ++i)
            if (std::fabs(f.at(i, j) - 1.0) > tol) ++count;
    return count * cell;
}

VectorField make_velocity(const ScalarField& f, double epsilon, SpectralWorkspace& ws) {
    VectorField u = biot_savart(f, ws);
    for (double& v : u.c1.values()) v *= epsilon;
    for (double& v : u.c2.values()) v *= epsilon;
    return u;
}

} // namespace vssc

#include "vssc/curve.hpp"

#include "vssc/errors.hpp"

#include <algorithm>
#include <cmath>

namespace vssc {

namespace {

// Minimum-image x1 difference on the period-2 torus, in (-1, 1].
double wrap_dx(double a, double b) {
    double d = std::remainder(b - a, 2.0);
    return d;
}

} // namespace

double curve_length(const PolyCurve& c) {
    const auto& v = c.vertices;
    if (v.size() < 2) throw DegenerateCurve("need at least 2 vertices");
    double len = 0.0;
    const std::size_t nseg = c.closed ? v.size() : v.size() - 1;
    for (std::size_t s = 0; s < nseg; ++s) {
        const auto& a = v[s];
        const auto& b = v[(s + 1) % v.size()];
        if (a == b && !(c.closed && s + 1 == v.size()))
            throw DegenerateCurve("consecutive vertices coincide");
        len += std::hypot(wrap_dx(a[0], b[0]), b[1] - a[1]);
    }
    return len;
}

ConfinementVerdict confinement_check(const PolyCurve& c, double length_budget) {
    if (c.winding != 1) throw NotGammaCandidate("winding must be 1");
    double ymin = c.vertices.empty() ? 0.0 : c.vertices[0][1];
    double ymax = ymin;
    for (const auto& p : c.vertices) {
        ymin = std::min(ymin, p[1]);
        ymax = std::max(ymax, p[1]);
    }
    if (!(ymin <= 2.0 && ymax >= 2.0))
        throw NotGammaCandidate("curve does not intersect x2 = 2");
    ConfinementVerdict out{};
    out.length = curve_length(c);
    out.inside_band = ymin > 1.5 && ymax < 2.5;
    out.within_budget = out.length <= length_budget;
    constexpr double sqrt5 = 2.2360679774997896;
    out.implication_holds = out.inside_band || out.length >= sqrt5 - 1e-12;
    return out;
}

double potential_energy_under(const PolyCurve& c) {
    const auto& v = c.vertices;
    if (v.size() < 2) throw DegenerateCurve("need at least 2 vertices");
    // For a graph segment y(x) linear on [xa, xb]: integral of y^2/2 dx
    // = (xb - xa) (ya^2 + ya yb + yb^2) / 6.
    double P = 0.0;
    const std::size_t nseg = c.closed ? v.size() : v.size() - 1;
    for (std::size_t s = 0; s < nseg; ++s) {
        const auto& a = v[s];
        const auto& b = v[(s + 1) % v.size()];
        const double dx = wrap_dx(a[0], b[0]);
        P += dx * (a[1] * a[1] + a[1] * b[1] + b[1] * b[1]) / 6.0;
    }
    return std::fabs(P);
}

} // namespace vssc

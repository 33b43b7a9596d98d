#include "vssc/bracket.hpp"

#include "vssc/interp.hpp"

#include <cmath>

namespace vssc {

namespace {

double segment_extremum(const StripSampler& s, double x1, double lo, double hi,
                        Side side, int samples) {
    double best = 0.0, best_x = lo;
    for (int k = 0; k <= samples; ++k) {
        const double x2 = lo + (hi - lo) * k / samples;
        const double v = s(x1, x2);
        if (k == 0 || (side == Side::Min ? v < best : v > best)) {
            best = v;
            best_x = x2;
        }
    }
    // 3 bisection levels around the discrete extremum
    double span = (hi - lo) / samples;
    for (int level = 0; level < 3; ++level) {
        const double l = std::max(lo, best_x - span);
        const double r = std::min(hi, best_x + span);
        for (int k = 0; k <= 4; ++k) {
            const double x2 = l + (r - l) * k / 4.0;
            const double v = s(x1, x2);
            if (side == Side::Min ? v < best : v > best) {
                best = v;
                best_x = x2;
            }
        }
        span /= 2.0;
    }
    return best;
}

} // namespace

double extremal_u1(const ScalarField& u1, double x1, Side side) {
    const TorusGrid& g = u1.grid();
    const double h = g.h2();
    if (!(x1 > 0.0 && x1 < 1.0)) throw DegenerateAbscissa("x1 must lie in (0,1)");
    if (x1 < 2.0 * h) throw DegenerateAbscissa("x1 under 2h");
    const StripSampler s(u1, StripSampler::WallParity::Even, false);
    const double hi = x1 * (1.0 - 1e-12);  // segment is x2 in [0, x1)
    const int samples = std::max(4, static_cast<int>(std::ceil(hi / h)) * 2);
    return segment_extremum(s, x1, 0.0, hi, side, samples);
}

double extremal_u1_scaled(const ScalarField& u1, double x1, Side side) {
    const double h = u1.grid().h2();
    if (x1 >= 2.0 * h) return extremal_u1(u1, x1, side);
    const double xref = 2.0 * h;
    return (x1 / xref) * extremal_u1(u1, xref, side);
}

BracketState::BracketState(double a0, double b0) : a(a0), b(b0) {
    if (!(0.0 < a0 && a0 < b0 && b0 < 1.0))
        throw InvalidSpec("bracket requires 0 < a < b < 1");
    record();
}

void BracketState::record() { history.push_back({t, a, b, std::log(b / a)}); }

void bracket_step(BracketState& bs, const SimState& state, double dt) {
    const ScalarField& u1 = state.vt.c1;
    const double fa1 = extremal_u1_scaled(u1, bs.a, Side::Max);
    const double fb1 = extremal_u1_scaled(u1, bs.b, Side::Min);
    const double a_pred = bs.a + dt * fa1;
    const double b_pred = bs.b + dt * fb1;
    const double fa2 = extremal_u1_scaled(u1, a_pred, Side::Max);
    const double fb2 = extremal_u1_scaled(u1, b_pred, Side::Min);
    bs.a += 0.5 * dt * (fa1 + fa2);
    bs.b += 0.5 * dt * (fb1 + fb2);
    bs.t += dt;
    if (bs.b <= bs.a) {
        bs.collapsed = true;
        throw BracketCollapse("b <= a at t = " + std::to_string(bs.t));
    }
    bs.record();
}

} // namespace vssc

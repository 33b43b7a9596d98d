#include "vssc/stepper.hpp"

#include <cmath>

namespace vssc {

SimState::SimState(ScalarField om, SpectralWorkspace& ws)
    : omega(std::move(om)), U(biot_savart(omega, ws)), vt(U) {}

void SimState::set_injected_e(VectorField e) {
    injected_e = std::move(e);
    refresh_transport();
}

void SimState::refresh_transport() {
    vt = U;
    if (!injected_e) return;
    auto a1 = vt.c1.values(), a2 = vt.c2.values();
    auto b1 = injected_e->c1.values(), b2 = injected_e->c2.values();
    for (std::size_t k = 0; k < a1.size(); ++k) {
        a1[k] += b1[k];
        a2[k] += b2[k];
    }
}

std::array<double, 2> characteristic_rk3(const StripSampler& v1, const StripSampler& v2,
                                         std::array<double, 2> x, double dt, double sign) {
    const double d = sign * dt;
    const double a1 = v1(x[0], x[1]), a2 = v2(x[0], x[1]);
    const double q1 = x[0] + 0.5 * d * a1, q2 = x[1] + 0.5 * d * a2;
    const double b1 = v1(q1, q2), b2 = v2(q1, q2);
    const double r1 = x[0] + 0.75 * d * b1, r2 = x[1] + 0.75 * d * b2;
    const double c1 = v1(r1, r2), c2 = v2(r1, r2);
    return {x[0] + d * (2.0 * a1 + 3.0 * b1 + 4.0 * c1) / 9.0,
            x[1] + d * (2.0 * a2 + 3.0 * b2 + 4.0 * c2) / 9.0};
}

void step(SimState& state, double dt, SpectralWorkspace& ws, const StepOptions& opts) {
    const TorusGrid& g = state.omega.grid();
    const ScalarField& tu1 = state.vt.c1;
    const ScalarField& tu2 = state.vt.c2;

    double vmax = std::max(tu1.sup(), tu2.sup());
    const double cfl = vmax * dt / std::min(g.h1(), g.h2());
    state.last_cfl = cfl;
    if (cfl > 1.0 && opts.cfl_hard)
        throw CflViolation("dt*sup|u|/h = " + std::to_string(cfl));

    const StripSampler v1(tu1, StripSampler::WallParity::Even, false);
    const StripSampler v2(tu2, StripSampler::WallParity::Odd, false);
    const StripSampler om(state.omega, StripSampler::WallParity::Odd,
                          opts.clip_interpolation);

    ScalarField next(g, state.omega.parity());
    const int n1 = g.n1(), R = g.rows();
    for (int j = 0; j < R; ++j) {
        const double x2 = g.x2(j);
        for (int i = 0; i < n1; ++i) {
            const auto p = characteristic_rk3(v1, v2, {g.x1(i), x2}, dt, -1.0);
            next.at(i, j) = om(p[0], p[1]);
        }
    }
    if (!next.finite()) throw NonFinite("step: transported vorticity");

    state.last_parity_violation = next.parity_violation();
    next.symmetrize();
    state.omega = std::move(next);
    state.U = biot_savart(state.omega, ws);
    state.refresh_transport();
    state.step_count += 1;
    state.t = state.step_count * dt;
}

void trace_step(Tracer& tr, const SimState& state, double dt) {
    const StripSampler v1(state.vt.c1, StripSampler::WallParity::Even, false);
    const StripSampler v2(state.vt.c2, StripSampler::WallParity::Odd, false);
    auto p = characteristic_rk3(v1, v2, tr.position, dt, +1.0);
    if (tr.bottom) p[1] = 0.0;  // u2 vanishes on the wall by parity
    p[0] = std::remainder(p[0], 2.0);
    if (p[1] < -1e-9 || p[1] > 1.0 + 1e-9)
        throw OutOfDomain("tracer left the strip at t = " + std::to_string(state.t));
    tr.position = p;
    tr.history.push_back({state.t, p[0], p[1]});
}

} // namespace vssc

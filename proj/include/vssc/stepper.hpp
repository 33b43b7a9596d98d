#ifndef VSSC_STEPPER_HPP
#define VSSC_STEPPER_HPP

#include "vssc/field.hpp"
#include "vssc/interp.hpp"
#include "vssc/spectral.hpp"

#include <array>
#include <cstdint>
#include <optional>

namespace vssc {

struct StepOptions {
    bool clip_interpolation = true;  // monotonized cubic (no overshoot)
    bool cfl_hard = false;           // throw instead of flagging on CFL excess
};

/** Vorticity transport state on the fixed strip. */
struct SimState {
    double t = 0.0;
    std::uint64_t step_count = 0;
    ScalarField omega;           // strip, odd in x1
    VectorField U;               // cached velocity of omega
    VectorField vt;              // transport velocity U + injected e
    std::optional<VectorField> injected_e;  // admissible error field
    double last_cfl = 0.0;
    double last_parity_violation = 0.0;  // pre-symmetrization, previous step

    explicit SimState(ScalarField om, SpectralWorkspace& ws);
    void set_injected_e(VectorField e);
    void refresh_transport();  // vt = U + injected_e
};

/** One semi-Lagrangian step: RK3 characteristic backtracking, cubic
 * interpolation (clipped by default), parity re-symmetrization, velocity
 * refresh. Throws NonFinite on NaNs; CFL excess flags (or throws). */
void step(SimState& state, double dt, SpectralWorkspace& ws,
          const StepOptions& opts = {});

/** RK3 departure point for velocity (v1, v2) sampled by cubic interpolation;
 * sign = -1 backtracks, +1 advances. */
std::array<double, 2> characteristic_rk3(const StripSampler& v1, const StripSampler& v2,
                                         std::array<double, 2> x, double dt, double sign);

struct Tracer {
    std::array<double, 2> position{};
    bool bottom = false;  // pinned to the wall x2 = 0
    std::string label;
    std::vector<std::array<double, 3>> history;  // (t, x1, x2)
};

/** Advance a tracer with the same RK3 scheme as the field step.
 * Throws OutOfDomain when the trajectory leaves the strip. */
void trace_step(Tracer& tr, const SimState& state, double dt);

} // namespace vssc

#endif

#ifndef VSSC_PROFILE_HPP
#define VSSC_PROFILE_HPP

#include "vssc/field.hpp"
#include "vssc/params.hpp"
#include "vssc/spectral.hpp"

namespace vssc {

/** Shape of the initial vorticity profile f. On the right half of the strip:
 * f rises 0 -> 1 over [kappa^m/4, kappa^m], holds 1 through 1 - delta, falls
 * back to 0 over [1 - delta, 1 - delta/4], and is cut off smoothly over the
 * top band [1 - taper_x2, 1]. Oddly reflected in x1. Transitions use the
 * exp(-1/s) smooth step, exactly 0/1 outside the transition zone. */
struct ProfileSpec {
    double kappa = 0.05;
    double delta = 0.1;
    int m = 2;
    double taper_x2 = 1.0 / 16;

    static ProfileSpec from(const SimParams& p) {
        return ProfileSpec{p.kappa, p.delta, p.m, p.taper_x2};
    }
    double kappa_m() const;
    void require_valid() const;  // throws InvalidSpec
};

/** The C-infinity step exp(-1/s)/(exp(-1/s)+exp(-1/(1-s))), clamped to {0,1}
 * outside [0,1]. */
double smooth_step(double s);

/** Profile f on the strip grid, odd in x1 (bitwise), 0 <= f <= 1 on the right
 * half. Throws InvalidSpec when the plateau [kappa^m, 1-delta] is under four
 * cells wide. */
ScalarField build_profile(const ProfileSpec& spec, const TorusGrid& strip_grid);

/** Area of {x in Omega+ : f != 1} by cell counting (tolerance 'tol' on f). */
double profile_exceptional_area(const ScalarField& f, double tol = 1e-12);

/** u0 = epsilon * (d2 phi, -d1 phi) with Lap phi = f, phi = 0 on the edges. */
VectorField make_velocity(const ScalarField& f, double epsilon, SpectralWorkspace& ws);

} // namespace vssc

#endif

#ifndef VSSC_PARAMS_HPP
#define VSSC_PARAMS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace vssc {

/** All scenario constants. Defaults are the documented baseline scenario. */
struct SimParams {
    double epsilon = 0.5;   // initial-velocity amplitude, u0 = epsilon * v0
    double sigma = 1.0;     // surface-tension constant
    double kappa = 0.05;    // profile constant, 0 < kappa < delta
    double delta = 0.1;     // profile constant, kappa < delta < 1/2
    int m = 2;              // bracket exponent, a(0) = kappa^m
    double dt = 0.01;
    double t_end = 40.0;
    int n1 = 512;           // doubled-torus samples in x1
    int n2 = 512;           // doubled-torus samples in x2
    double sym_tol = 1e-10;
    double div_tol = 1e-12;
    double omega_tol = 1e-3;  // region-membership tolerance, |omega-eps| <= tol*eps
    int lattice_N = 64;       // Green's-sum truncation radius
    std::uint64_t seed = 12345;
    double taper_x2 = 1.0 / 16;  // top-edge profile cutoff width

    double kappa_m() const;  // kappa^m

    /** Returns human-readable violations (empty when valid). */
    std::vector<std::string> validate() const;
    /** Throws ValidationError when invalid. */
    void require_valid() const;
};

} // namespace vssc

#endif

#ifndef VSSC_KEYLEMMA_HPP
#define VSSC_KEYLEMMA_HPP

#include "vssc/field.hpp"

#include <array>
#include <vector>

namespace vssc {

/** Midpoint quadrature of (y1 y2 / |y|^4) omega(y) over Q(2x) = [2x1,1]x[2x2,1]
 * on the field's own grid. Throws EmptyBox when 2x1 >= 1 or 2x2 >= 1. */
double q_integral(const ScalarField& omega, std::array<double, 2> x);

/** The worst-case sector floor (eps pi / 48)(log(1/delta) - 2 log 4). */
double sector_floor(double eps, double delta);

/** One decomposition sample: u_j(x) = (-1)^j (4/pi) (q + B_j) x_j. */
struct KeyLemmaSample {
    std::array<double, 2> x{};
    int j = 1;
    double u_j = 0.0;
    double q = 0.0;
    double B = 0.0;
    double log_factor = 0.0;  // 1 + log(1 + x_{3-j}/x_j)
    double bound_rhs = 0.0;   // filled by the fitter
};

/** Extract B_j = (-1)^j (pi/4) u_j(x)/x_j - q_integral(omega, x).
 * Throws DegeneratePoint for x_j < 2h. */
KeyLemmaSample extract_B(const ScalarField& omega, const VectorField& u,
                         std::array<double, 2> x, int j);

/** Smallest C0 with |B| <= C0 (omega_sup (1 + log(1 + x_{3-j}/x_j)) + sqrt(K0))
 * over all samples; also fills each sample's bound_rhs. Requires >= 20 samples
 * spanning a decade in x2/x1. */
double fit_remainder_constant(std::vector<KeyLemmaSample>& samples, double K0,
                              double omega_sup);

/** Rectangle-integral constant: max over a in (0, 1/2) of
 * integral_{[2a,1]x[0,2a]} y1 y2/|y|^4 dy (closed-form inner integral). */
double c3_constant(int grid_points = 99);

} // namespace vssc

#endif

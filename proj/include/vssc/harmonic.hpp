#ifndef VSSC_HARMONIC_HPP
#define VSSC_HARMONIC_HPP

#include "vssc/field.hpp"

#include <vector>

namespace vssc {

/** Sampled top-trace of a strip stream function (values of F on x2 = 1). */
struct BoundaryData {
    std::vector<double> g;  // n1 samples over x1 in [-1, 1)
    Parity parity_x1 = Parity::None;
};

/** Harmonic extension into the strip with F = 0 on the bottom edge:
 *   F = a0 x2 + sum_k [a_k cos(pi k x1) + b_k sin(pi k x1)] sinh(pi k x2)/sinh(pi k)
 * where a_k, b_k are the Fourier coefficients of g. The sinh ratio is
 * evaluated in exponential form, stable for all mode numbers. */
ScalarField harmonic_extension(const BoundaryData& g, const TorusGrid& strip_grid);

/** e = (d2 F, -d1 F): x1-derivative spectral, x2-derivative second-order FD.
 * e.n = 0 on the bottom edge bitwise (the F = 0 row differentiates to zero);
 * when F is odd in x1, e1 is odd and e2 even in x1, enforced exactly. */
VectorField error_field(const ScalarField& F);

/** max |e_j(x)| / |x_j| over the grid points of B_r cap Omega (x_j != 0). */
double error_slope_fit(const VectorField& e, int j, double radius);

} // namespace vssc

#endif

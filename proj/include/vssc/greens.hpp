#ifndef VSSC_GREENS_HPP
#define VSSC_GREENS_HPP

#include "vssc/field.hpp"

#include <array>

namespace vssc {

/** Exact integral of ln|y| over the rectangle [a,b] x [c,d] (the rectangle
 * may contain the origin; the singularity is integrable and handled in
 * closed form). */
double rect_log_integral(double a, double b, double c, double d);

/** Truncated Newtonian-potential evaluation of the stream function:
 *
 *   psi(x) ~= (1/2pi) sum_{|n_i|<=N} integral ln|x - y - 2n| omega(y) dy
 *
 * with midpoint quadrature on the field's own grid; the cell containing x
 * uses the exact log integral. Deterministic given inputs. Independent of
 * the spectral path (no FFTs).
 *
 * Throws SingularPoint when x coincides with a grid node and the
 * singular-cell correction is disabled. */
double greens_point_eval(const ScalarField& omega, std::array<double, 2> x,
                         int lattice_N, bool singular_correction = true);

} // namespace vssc

#endif

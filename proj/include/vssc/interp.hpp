#ifndef VSSC_INTERP_HPP
#define VSSC_INTERP_HPP

#include "vssc/field.hpp"

namespace vssc {

/** Cubic (4-point Lagrange) sampler for strip fields. x1 wraps periodically;
 * across the walls x2 in {0,1} the stencil is continued by reflection with
 * the field's wall parity (odd for vorticity and u2, even for u1).
 * Clipping limits the value to the min/max of the four bracketing nodes
 * (quasi-monotone semi-Lagrangian). */
class StripSampler {
  public:
    enum class WallParity { Odd, Even };

    StripSampler(const ScalarField& f, WallParity wp, bool clip)
        : f_(f), wp_(wp), clip_(clip) {}

    double operator()(double x1, double x2) const;

  private:
    double node(int i, int j) const;  // reflected/wrapped accessor

    const ScalarField& f_;
    WallParity wp_;
    bool clip_;
};

} // namespace vssc

#endif

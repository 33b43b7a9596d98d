#ifndef VSSC_BRACKET_HPP
#define VSSC_BRACKET_HPP

#include "vssc/stepper.hpp"

#include <array>
#include <vector>

namespace vssc {

enum class Side { Min, Max };

/** Extremal horizontal velocity over the vertical segment {x2 in [0, x1)} at
 * abscissa x1: grid-density sampling plus 3 bisection levels around the
 * discrete extremum. Throws DegenerateAbscissa for x1 < 2h. */
double extremal_u1(const ScalarField& u1, double x1, Side side);

/** Same, continued linearly below 2h: u(x1) = (x1/2h) u(2h). The bracket
 * ODEs need this once a(t), b(t) fall under grid scale. */
double extremal_u1_scaled(const ScalarField& u1, double x1, Side side);

/** The pair (a, b) driven by the extremal-velocity ODEs, with history. */
struct BracketState {
    double a = 0.0;  // a' = max-side extremal at a
    double b = 0.0;  // b' = min-side extremal at b
    double t = 0.0;
    bool collapsed = false;
    std::vector<std::array<double, 4>> history;  // (t, a, b, log(b/a))

    BracketState(double a0, double b0);
    void record();
};

/** One RK2 (Heun) step of both ODEs against the state's transport velocity.
 * Throws BracketCollapse when b <= a afterwards. */
void bracket_step(BracketState& bs, const SimState& state, double dt);

} // namespace vssc

#endif

#ifndef VSSC_CURVE_HPP
#define VSSC_CURVE_HPP

#include <array>
#include <vector>

namespace vssc {

/** Closed polyline on T x R+ (x1 periodic with period 2). */
struct PolyCurve {
    std::vector<std::array<double, 2>> vertices;  // (x1 mod 2, x2 > 0)
    bool closed = true;
    int winding = 1;  // times the curve wraps the x1 period
};

/** Sum of segment lengths using the wraparound (minimum-image) x1 distance. */
double curve_length(const PolyCurve& c);

struct ConfinementVerdict {
    bool inside_band;        // contained in T x (3/2, 5/2)
    bool within_budget;      // length <= budget
    double length;
    bool implication_holds;  // exits band => length >= sqrt(5)
};

/** Geometric lemma checker for Gamma-candidate curves (winding 1, meets x2=2):
 * reports band containment vs. the length budget and verifies the
 * "exits band => length >= sqrt 5" implication on the supplied curve. */
ConfinementVerdict confinement_check(const PolyCurve& c, double length_budget);

/** Integral of x2 over the region below the curve (potential energy of the
 * region T x (0, y(x1)) for graph-like curves); exact per segment. */
double potential_energy_under(const PolyCurve& c);

} // namespace vssc

#endif

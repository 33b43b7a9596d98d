#ifndef VSSC_ENERGY_HPP
#define VSSC_ENERGY_HPP

#include "vssc/curve.hpp"
#include "vssc/field.hpp"

#include <optional>

namespace vssc {

enum class Quadrature { Trapezoid, Gregory };

/** K = (1/2) integral |u|^2 over the stored domain. On strips the x2 sum uses
 * half-weight wall rows (the trapezoid rule; by the even/odd wall symmetry of
 * velocity components this equals half the uniform doubled-torus sum, so it
 * is aliasing-accurate). Gregory adds third-order end corrections; the two
 * rules cross-check each other well below 1e-6 relative. */
double kinetic_energy(const VectorField& u, Quadrature q = Quadrature::Trapezoid);

struct EnergyBudget {
    double K0 = 0.0;       // kinetic energy of epsilon * v0
    double C1 = 0.0;       // K(v0), so K0 <= C1 eps^2
    double epsilon0 = 0.0; // admissibility threshold: eps < eps0  =>  K0 <= sigma/20
    double sigma = 1.0;
    bool accepts(double eps) const { return eps < epsilon0; }
};

/** epsilon0 = sqrt(sigma / (20 C1)). Throws NonpositiveInput. */
EnergyBudget epsilon_gate(double C1, double sigma);

/** E = K + sigma L (+ gravity * P with P the x2-integral under the curve). */
double energy_functional(const VectorField& u, const PolyCurve& c, double sigma,
                         std::optional<double> gravity = std::nullopt);

} // namespace vssc

#endif

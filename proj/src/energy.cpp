#include "vssc/energy.hpp"

#include "vssc/errors.hpp"

#include <cmath>
#include <vector>

namespace vssc {

namespace {

std::vector<double> row_weights(int R, Quadrature q) {
    std::vector<double> w(R, 1.0);
    if (q == Quadrature::Trapezoid || R < 6) {
        w[0] = w[R - 1] = 0.5;
    } else {
        // Gregory third-order end corrections
        w[0] = w[R - 1] = 3.0 / 8;
        w[1] = w[R - 2] = 7.0 / 6;
        w[2] = w[R - 3] = 23.0 / 24;
    }
    return w;
}

} // namespace

double kinetic_energy(const VectorField& u, Quadrature q) {
    const TorusGrid& g = u.c1.grid();
    if (u.c2.grid() != g) throw GridMismatch("kinetic_energy: component grids differ");
    if (!u.c1.finite() || !u.c2.finite()) throw NonFinite("kinetic_energy: velocity");
    const int n1 = g.n1(), R = g.rows();
    const double cell = g.h1() * g.h2();
    double s = 0.0;
    if (g.kind() == Domain::Strip) {
        const auto w = row_weights(R, q);
        for (int j = 0; j < R; ++j) {
            double rs = 0.0;
            for (int i = 0; i < n1; ++i)
                rs += u.c1.at(i, j) * u.c1.at(i, j) + u.c2.at(i, j) * u.c2.at(i, j);
            s += w[j] * rs;
        }
    } else {
        for (int j = 0; j < R; ++j)
            for (int i = 0; i < n1; ++i)
                s += u.c1.at(i, j) * u.c1.at(i, j) + u.c2.at(i, j) * u.c2.at(i, j);
    }
    return 0.5 * s * cell;
}

EnergyBudget epsilon_gate(double C1, double sigma) {
    if (!(C1 > 0.0) || !(sigma > 0.0))
        throw NonpositiveInput("epsilon_gate: C1 and sigma must be positive");
    EnergyBudget b;
    b.C1 = C1;
    b.sigma = sigma;
    b.epsilon0 = std::sqrt(sigma / (20.0 * C1));
    return b;
}

double energy_functional(const VectorField& u, const PolyCurve& c, double sigma,
                         std::optional<double> gravity) {
    double E = kinetic_energy(u) + sigma * curve_length(c);
    if (gravity) E += *gravity * potential_energy_under(c);
    return E;
}

} // namespace vssc

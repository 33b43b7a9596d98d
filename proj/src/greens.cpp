#include "vssc/greens.hpp"

#include "vssc/errors.hpp"

#include <cmath>
#include <vector>

namespace vssc {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Antiderivative G with d^2 G / du dv = ln sqrt(u^2 + v^2), valid on a closed
// quadrant (u, v same-signed region not straddling the axes).
double corner(double u, double v) {
    if (u == 0.0 || v == 0.0) return 0.0;
    const double r2 = u * u + v * v;
    return 0.5 * u * v * std::log(r2) - 1.5 * u * v +
           0.5 * u * u * std::atan(v / u) + 0.5 * v * v * std::atan(u / v);
}

double quadrant_integral(double a, double b, double c, double d) {
    return corner(b, d) - corner(a, d) - corner(b, c) + corner(a, c);
}

} // namespace

double rect_log_integral(double a, double b, double c, double d) {
    // split at the axes so each piece lies in one quadrant
    double total = 0.0;
    const double us[3] = {a, std::clamp(0.0, a, b), b};
    const double vs[3] = {c, std::clamp(0.0, c, d), d};
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
            if (us[p] != us[p + 1] && vs[q] != vs[q + 1])
                total += quadrant_integral(us[p], us[p + 1], vs[q], vs[q + 1]);
    return total;
}

double greens_point_eval(const ScalarField& omega, std::array<double, 2> x,
                         int lattice_N, bool singular_correction) {
    const TorusGrid& g = omega.grid();
    if (g.kind() != Domain::DoubledTorus)
        throw GridMismatch("greens_point_eval: doubled-torus field expected");
    const int n1 = g.n1(), n2 = g.n2(), N = lattice_N;
    const double h1 = g.h1(), h2 = g.h2();
    const int L = 2 * N + 1;

    // Reduced displacements: the unique representative of x - y (mod 2) in
    // (-1, 1] locates the singular cell; the shift that realizes it must lie
    // within the truncation radius to be part of the sum.
    const double rx1 = std::remainder(x[0] - g.x1(0), 2.0);
    const double rx2 = std::remainder(x[1] - g.x2(0), 2.0);
    const int is = static_cast<int>(std::lround(rx1 / h1));
    const int js = static_cast<int>(std::lround(rx2 / h2));
    const int icell = ((is % n1) + n1) % n1;
    const int jcell = ((js % n2) + n2) % n2;
    const double du_s = std::remainder(x[0] - g.x1(icell), 2.0);
    const double dv_s = std::remainder(x[1] - g.x2(jcell), 2.0);
    const bool on_node = du_s == 0.0 && dv_s == 0.0;
    if (on_node && !singular_correction)
        throw SingularPoint("query point coincides with a grid node");

    // du^2 table over (column, shift)
    std::vector<double> du2(static_cast<std::size_t>(n1) * L);
    for (int i = 0; i < n1; ++i) {
        const double base = x[0] - g.x1(i);
        for (int s = 0; s < L; ++s) {
            const double d = base - 2.0 * (s - N);
            du2[static_cast<std::size_t>(i) * L + s] = d * d;
        }
    }

    // the lattice shift of the singular cell
    const int ns1 = static_cast<int>(std::lround((x[0] - g.x1(icell) - du_s) / 2.0));
    const int ns2 = static_cast<int>(std::lround((x[1] - g.x2(jcell) - dv_s) / 2.0));
    const bool singular_in_range = std::abs(ns1) <= N && std::abs(ns2) <= N;

    double acc = 0.0;
    std::vector<double> du2row;  // modified copy for the singular row
    for (int j = 0; j < n2; ++j) {
        const double vbase = x[1] - g.x2(j);
        for (int s2 = 0; s2 < L; ++s2) {
            const double dv = vbase - 2.0 * (s2 - N);
            const double dv2 = dv * dv;
            const double* du2p = du2.data();
            const bool srow = singular_in_range && j == jcell && (s2 - N) == ns2;
            if (srow) {
                du2row.assign(du2.begin(), du2.end());
                // ln(1) = 0 removes the point term of the singular cell
                du2row[static_cast<std::size_t>(icell) * L + (ns1 + N)] = 1.0 - dv2;
                du2p = du2row.data();
            }
            // row accumulation: sum_i omega_i * sum_s ln(du2 + dv2)/2,
            // logs batched as products of 16
            double rowsum = 0.0;
            for (int i = 0; i < n1; ++i) {
                const double w = omega.at(i, j);
                if (w == 0.0) continue;
                const double* d2 = du2p + static_cast<std::size_t>(i) * L;
                double lg = 0.0;
                int s = 0;
                for (; s + 16 <= L; s += 16) {
                    double prod = 1.0;
                    for (int t = 0; t < 16; ++t) prod *= d2[s + t] + dv2;
                    lg += std::log(prod);
                }
                double prod = 1.0;
                for (; s < L; ++s) prod *= d2[s] + dv2;
                lg += std::log(prod);
                rowsum += w * lg;
            }
            acc += 0.5 * rowsum;  // ln r = ln(r^2)/2
        }
    }
    double psi = acc * h1 * h2;

    if (singular_in_range) {
        // replace the midpoint term of the singular cell by the exact integral
        psi += omega.at(icell, jcell) *
               rect_log_integral(du_s - h1 / 2, du_s + h1 / 2, dv_s - h2 / 2, dv_s + h2 / 2);
    }
    return psi / (2.0 * kPi);
}

} // namespace vssc

#include "vssc/harmonic.hpp"

#include "vssc/errors.hpp"

#include <fftw3.h>

#include <cmath>
#include <vector>

namespace vssc {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

// sinh(pi k x2) / sinh(pi k) without overflow, x2 in [0, 1]
double sinh_ratio(int k, double x2) {
    const double a = kPi * k;
    return std::exp(a * (x2 - 1.0)) * (1.0 - std::exp(-2.0 * a * x2)) /
           (1.0 - std::exp(-2.0 * a));
}
} // namespace

ScalarField harmonic_extension(const BoundaryData& bd, const TorusGrid& strip_grid) {
    if (strip_grid.kind() != Domain::Strip)
        throw GridMismatch("harmonic_extension: strip grid expected");
    const int n1 = strip_grid.n1();
    if (static_cast<int>(bd.g.size()) != n1)
        throw GridMismatch("harmonic_extension: boundary data size mismatch");
    for (double v : bd.g)
        if (!std::isfinite(v)) throw NonFinite("harmonic_extension: boundary data");

    // Fourier coefficients of g
    std::vector<double> in(bd.g);
    std::vector<fftw_complex> coef(n1 / 2 + 1);
    fftw_plan p = fftw_plan_dft_r2c_1d(n1, in.data(), coef.data(), FFTW_ESTIMATE);
    fftw_execute(p);
    fftw_destroy_plan(p);
    const double scale = 1.0 / n1;

    ScalarField F(strip_grid, ParityClass{bd.parity_x1, Parity::None});
    const int R = strip_grid.rows();

    // per-row inverse transform of coef_k * sinh_ratio_k
    std::vector<fftw_complex> spec(n1 / 2 + 1);
    std::vector<double> out(n1);
    fftw_plan pb = fftw_plan_dft_c2r_1d(n1, spec.data(), out.data(), FFTW_ESTIMATE);
    const double a0 = coef[0][0] * scale;
    for (int j = 1; j < R; ++j) {
        const double x2 = strip_grid.x2(j);
        spec[0][0] = 0.0;
        spec[0][1] = 0.0;
        for (int k = 1; k <= n1 / 2; ++k) {
            const double s = sinh_ratio(k, x2) * scale;
            spec[k][0] = coef[k][0] * s;
            spec[k][1] = coef[k][1] * s;
        }
        fftw_execute(pb);
        for (int i = 0; i < n1; ++i) F.at(i, j) = out[i] + a0 * x2;
    }
    fftw_destroy_plan(pb);
    for (int i = 0; i < n1; ++i) F.at(i, 0) = 0.0;  // bottom edge, exact
    if (bd.parity_x1 != Parity::None) F.symmetrize();
    return F;
}

VectorField error_field(const ScalarField& F) {
    const TorusGrid& g = F.grid();
    if (g.kind() != Domain::Strip) throw GridMismatch("error_field: strip field expected");
    const int n1 = g.n1(), R = g.rows();
    const double h2 = g.h2();

    ScalarField e1(g, ParityClass{Parity::None, Parity::None});
    ScalarField e2(g, ParityClass{Parity::None, Parity::None});

    // e1 = d2 F (centered interior, one-sided second order at the edges)
    for (int i = 0; i < n1; ++i) {
        e1.at(i, 0) = (-3.0 * F.at(i, 0) + 4.0 * F.at(i, 1) - F.at(i, 2)) / (2 * h2);
        e1.at(i, R - 1) =
            (3.0 * F.at(i, R - 1) - 4.0 * F.at(i, R - 2) + F.at(i, R - 3)) / (2 * h2);
    }
    for (int j = 1; j < R - 1; ++j)
        for (int i = 0; i < n1; ++i)
            e1.at(i, j) = (F.at(i, j + 1) - F.at(i, j - 1)) / (2 * h2);

    // e2 = -d1 F, spectral per row
    std::vector<double> in(n1), out(n1);
    std::vector<fftw_complex> spec(n1 / 2 + 1);
    fftw_plan pf = fftw_plan_dft_r2c_1d(n1, in.data(), spec.data(), FFTW_ESTIMATE);
    fftw_plan pb = fftw_plan_dft_c2r_1d(n1, spec.data(), out.data(), FFTW_ESTIMATE);
    const double scale = 1.0 / n1;
    for (int j = 0; j < R; ++j) {
        for (int i = 0; i < n1; ++i) in[i] = F.at(i, j);
        fftw_execute(pf);
        for (int k = 0; k <= n1 / 2; ++k) {
            const double q = (k == n1 / 2) ? 0.0 : kPi * k;  // Nyquist zeroed
            const double re = spec[k][0], im = spec[k][1];
            spec[k][0] = q * im * scale;    // -(i q) * c
            spec[k][1] = -q * re * scale;
        }
        fftw_execute(pb);
        for (int i = 0; i < n1; ++i) e2.at(i, j) = out[i];
    }
    fftw_destroy_plan(pf);
    fftw_destroy_plan(pb);

    if (F.parity().x1 == Parity::Odd) {
        e1.set_parity(ParityClass{Parity::Odd, Parity::None});
        e2.set_parity(ParityClass{Parity::Even, Parity::None});
        e1.symmetrize();
        e2.symmetrize();
    }
    return VectorField{std::move(e1), std::move(e2)};
}

double error_slope_fit(const VectorField& e, int j, double radius) {
    const ScalarField& c = j == 1 ? e.c1 : e.c2;
    const TorusGrid& g = c.grid();
    double worst = 0.0;
    for (int r = 0; r < g.rows(); ++r) {
        const double x2 = g.x2(r);
        for (int i = 0; i < g.n1(); ++i) {
            const double x1 = g.x1(i);
            if (x1 * x1 + x2 * x2 >= radius * radius) continue;
            const double xj = j == 1 ? x1 : x2;
            if (xj == 0.0) continue;
            worst = std::max(worst, std::fabs(c.at(i, r)) / std::fabs(xj));
        }
    }
    return worst;
}

} // namespace vssc

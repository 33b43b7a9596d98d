#include "vssc/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>

namespace vssc {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

struct SpectralWorkspace::Impl {
    int n1 = 0, n2 = 0, nc = 0;
    double* real = nullptr;
    fftw_complex* spec = nullptr;
    fftw_complex* spec2 = nullptr;  // scratch for two-component derivatives
    fftw_plan fwd{};
    fftw_plan bwd{};

    explicit Impl(const TorusGrid& g) : n1(g.n1()), n2(g.n2()), nc(g.n1() / 2 + 1) {
        real = fftw_alloc_real(static_cast<std::size_t>(n1) * n2);
        spec = fftw_alloc_complex(static_cast<std::size_t>(nc) * n2);
        spec2 = fftw_alloc_complex(static_cast<std::size_t>(nc) * n2);
        // first (slow) dimension is the x2 row index, second is x1
        fwd = fftw_plan_dft_r2c_2d(n2, n1, real, spec, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_c2r_2d(n2, n1, spec, real, FFTW_ESTIMATE);
    }
    ~Impl() {
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(real);
        fftw_free(spec);
        fftw_free(spec2);
    }

    void load(const ScalarField& f) {
        std::memcpy(real, f.data(), sizeof(double) * static_cast<std::size_t>(n1) * n2);
        fftw_execute(fwd);
    }
    void store(ScalarField& f) {
        fftw_execute(bwd);
        const double scale = 1.0 / (static_cast<double>(n1) * n2);
        double* out = f.data();
        const std::size_t n = static_cast<std::size_t>(n1) * n2;
        for (std::size_t k = 0; k < n; ++k) out[k] = real[k] * scale;
    }

    double k1(int i) const { return kPi * i; }                       // i in [0, nc)
    double k2(int j) const { return kPi * (j <= n2 / 2 ? j : j - n2); }
};

SpectralWorkspace::SpectralWorkspace(const TorusGrid& grid)
    : grid_(grid), impl_(std::make_unique<Impl>(grid)) {
    if (grid.kind() != Domain::DoubledTorus)
        throw GridMismatch("SpectralWorkspace needs a doubled-torus grid");
}

SpectralWorkspace::~SpectralWorkspace() = default;

double SpectralWorkspace::roundtrip_error(const ScalarField& f) {
    if (f.grid() != grid_) throw GridMismatch("roundtrip_error: wrong grid");
    impl_->load(f);
    ScalarField back(grid_);
    impl_->store(back);
    double num = 0.0, den = 0.0;
    auto a = f.values();
    auto b = back.values();
    for (std::size_t k = 0; k < a.size(); ++k) {
        num = std::max(num, std::fabs(a[k] - b[k]));
        den = std::max(den, std::fabs(a[k]));
    }
    return den > 0 ? num / den : num;
}

ScalarField SpectralWorkspace::poisson(const ScalarField& omega) {
    if (omega.grid() != grid_) throw GridMismatch("poisson: wrong grid");
    const double m = omega.mean();
    if (std::fabs(m) > 1e-12 * std::max(1.0, omega.sup()))
        throw NonzeroMean("poisson: |mean| = " + std::to_string(std::fabs(m)));
    impl_->load(omega);
    for (int j = 0; j < impl_->n2; ++j) {
        const double q2 = impl_->k2(j) * impl_->k2(j);
        for (int i = 0; i < impl_->nc; ++i) {
            const double ksq = impl_->k1(i) * impl_->k1(i) + q2;
            fftw_complex& c = impl_->spec[static_cast<std::size_t>(j) * impl_->nc + i];
            if (ksq == 0.0) {
                c[0] = 0.0;
                c[1] = 0.0;
            } else {
                c[0] /= -ksq;
                c[1] /= -ksq;
            }
        }
    }
    ScalarField psi(grid_, omega.parity());
    impl_->store(psi);
    psi.symmetrize();
    return psi;
}

VectorField SpectralWorkspace::velocity(const ScalarField& omega) {
    if (omega.grid() != grid_) throw GridMismatch("velocity: wrong grid");
    const double m = omega.mean();
    if (std::fabs(m) > 1e-12 * std::max(1.0, omega.sup()))
        throw NonzeroMean("velocity: |mean| = " + std::to_string(std::fabs(m)));

    // psihat in spec2, then u1 = d2 psi, u2 = -d1 psi from it (3 transforms).
    impl_->load(omega);
    fftw_complex* ph = impl_->spec2;
    for (int j = 0; j < impl_->n2; ++j) {
        const double q2 = impl_->k2(j) * impl_->k2(j);
        for (int i = 0; i < impl_->nc; ++i) {
            const std::size_t idx = static_cast<std::size_t>(j) * impl_->nc + i;
            const double ksq = impl_->k1(i) * impl_->k1(i) + q2;
            const double f = ksq == 0.0 ? 0.0 : -1.0 / ksq;
            ph[idx][0] = impl_->spec[idx][0] * f;
            ph[idx][1] = impl_->spec[idx][1] * f;
        }
    }

    ScalarField u1(grid_, ParityClass{Parity::None, Parity::None});
    ScalarField u2(grid_, ParityClass{Parity::None, Parity::None});

    for (int j = 0; j < impl_->n2; ++j) {
        // d2: multiply by i*k2; Nyquist row j = n2/2 has an ambiguous sign, zero it
        double q = impl_->k2(j);
        if (j == impl_->n2 / 2) q = 0.0;
        for (int i = 0; i < impl_->nc; ++i) {
            const std::size_t idx = static_cast<std::size_t>(j) * impl_->nc + i;
            impl_->spec[idx][0] = -q * ph[idx][1];
            impl_->spec[idx][1] = q * ph[idx][0];
        }
    }
    impl_->store(u1);

    for (int j = 0; j < impl_->n2; ++j) {
        for (int i = 0; i < impl_->nc; ++i) {
            double q = impl_->k1(i);
            if (i == impl_->n1 / 2) q = 0.0;  // Nyquist column
            const std::size_t idx = static_cast<std::size_t>(j) * impl_->nc + i;
            impl_->spec[idx][0] = q * ph[idx][1];   // -(i k1 psi): re
            impl_->spec[idx][1] = -q * ph[idx][0];  //              im
        }
    }
    impl_->store(u2);

    if (omega.parity().x1 == Parity::Odd && omega.parity().x2 == Parity::Odd) {
        u1.set_parity(ParityClass{Parity::Odd, Parity::Even});
        u2.set_parity(ParityClass{Parity::Even, Parity::Odd});
        u1.symmetrize();
        u2.symmetrize();
    }
    return VectorField{std::move(u1), std::move(u2)};
}

ScalarField SpectralWorkspace::laplacian(const ScalarField& f) {
    if (f.grid() != grid_) throw GridMismatch("laplacian: wrong grid");
    impl_->load(f);
    for (int j = 0; j < impl_->n2; ++j) {
        const double q2 = impl_->k2(j) * impl_->k2(j);
        for (int i = 0; i < impl_->nc; ++i) {
            const double ksq = impl_->k1(i) * impl_->k1(i) + q2;
            fftw_complex& c = impl_->spec[static_cast<std::size_t>(j) * impl_->nc + i];
            c[0] *= -ksq;
            c[1] *= -ksq;
        }
    }
    ScalarField out(grid_, f.parity());
    impl_->store(out);
    return out;
}

double SpectralWorkspace::divergence_sup(const VectorField& v) {
    if (v.c1.grid() != grid_ || v.c2.grid() != grid_)
        throw GridMismatch("divergence_sup: wrong grid");
    // spectral d1 v1
    impl_->load(v.c1);
    std::vector<fftw_complex> a(static_cast<std::size_t>(impl_->nc) * impl_->n2);
    std::memcpy(a.data(), impl_->spec, sizeof(fftw_complex) * a.size());
    impl_->load(v.c2);
    for (int j = 0; j < impl_->n2; ++j) {
        double q2 = impl_->k2(j);
        if (j == impl_->n2 / 2) q2 = 0.0;
        for (int i = 0; i < impl_->nc; ++i) {
            double q1 = impl_->k1(i);
            if (i == impl_->n1 / 2) q1 = 0.0;
            const std::size_t idx = static_cast<std::size_t>(j) * impl_->nc + i;
            const double v2re = impl_->spec[idx][0], v2im = impl_->spec[idx][1];
            const double v1re = a[idx][0], v1im = a[idx][1];
            impl_->spec[idx][0] = -q1 * v1im - q2 * v2im;
            impl_->spec[idx][1] = q1 * v1re + q2 * v2re;
        }
    }
    ScalarField div(grid_);
    impl_->store(div);
    return div.sup();
}

ScalarField solve_dirichlet_strip(const ScalarField& omega, SpectralWorkspace& ws) {
    if (omega.grid().kind() != Domain::Strip)
        throw GridMismatch("solve_dirichlet_strip: strip field expected");
    ScalarField ext = extend_odd_x2(omega);
    ScalarField psi = ws.poisson(ext);
    psi.set_parity(ParityClass{omega.parity().x1, Parity::Odd});
    psi.symmetrize();  // zeroes both seam rows exactly
    return restrict_to_strip(psi);
}

VectorField biot_savart(const ScalarField& omega, SpectralWorkspace& ws) {
    if (omega.grid().kind() == Domain::Strip) {
        ScalarField ext = extend_odd_x2(omega);
        VectorField U = ws.velocity(ext);
        VectorField out{restrict_to_strip(U.c1), restrict_to_strip(U.c2)};
        out.c1.set_parity(ParityClass{U.c1.parity().x1, Parity::None});
        out.c2.set_parity(ParityClass{U.c2.parity().x1, Parity::None});
        out.c1.symmetrize();
        out.c2.symmetrize();
        return out;
    }
    return ws.velocity(omega);
}

} // namespace vssc

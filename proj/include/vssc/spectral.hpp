#ifndef VSSC_SPECTRAL_HPP
#define VSSC_SPECTRAL_HPP

#include "vssc/field.hpp"

#include <complex>
#include <memory>
#include <vector>

namespace vssc {

/** FFT workspace for one doubled-torus grid. Not shareable across concurrent
 * executions; each worker owns one. Plans use FFTW_ESTIMATE so identical
 * inputs give bitwise-identical outputs within one build.
 *
 * Velocity convention used throughout this project:
 *   u = (d2 psi, -d1 psi),  omega = d2 u1 - d1 u2  (so omega = Lap psi).
 */
class SpectralWorkspace {
  public:
    explicit SpectralWorkspace(const TorusGrid& grid);  // doubled-torus grid
    ~SpectralWorkspace();
    SpectralWorkspace(const SpectralWorkspace&) = delete;
    SpectralWorkspace& operator=(const SpectralWorkspace&) = delete;

    const TorusGrid& grid() const { return grid_; }

    /** Relative round-trip error of forward+backward transform on the data. */
    double roundtrip_error(const ScalarField& f);

    /** Spectral solution of Lap psi = omega with mean(psi) = 0.
     * Throws NonzeroMean when |mean(omega)| > 1e-12 * max(1, sup|omega|). */
    ScalarField poisson(const ScalarField& omega);

    /** u = (d2 psi, -d1 psi) for Lap psi = omega, computed spectrally. */
    VectorField velocity(const ScalarField& omega);

    /** Spectral Laplacian (for residual checks). */
    ScalarField laplacian(const ScalarField& f);

    /** Sup of the spectral divergence d1 v1 + d2 v2. */
    double divergence_sup(const VectorField& v);

  private:
    struct Impl;
    TorusGrid grid_;
    std::unique_ptr<Impl> impl_;
};

/** Stream function of the strip Dirichlet problem Lap Phi = omega,
 * Phi = 0 on both edges, solved by odd reflection through the torus solver. */
ScalarField solve_dirichlet_strip(const ScalarField& omega, SpectralWorkspace& ws);

/** Velocity reconstruction from vorticity. Strip input is extended oddly,
 * solved on the doubled torus, and restricted back; parities are enforced
 * exactly on symmetric inputs. */
VectorField biot_savart(const ScalarField& omega, SpectralWorkspace& ws);

} // namespace vssc

#endif

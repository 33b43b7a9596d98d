#ifndef VSSC_FIELD_HPP
#define VSSC_FIELD_HPP

#include "vssc/grid.hpp"

#include <span>
#include <vector>

namespace vssc {

enum class Parity { Odd, Even, None };

struct ParityClass {
    Parity x1 = Parity::None;
    Parity x2 = Parity::None;
};

/** Grid-sampled real function with a declared parity class.
 * Values are row-major: index = j*n1 + i, row j is an x2 level. */
class ScalarField {
  public:
    explicit ScalarField(const TorusGrid& grid, ParityClass parity = {});

    const TorusGrid& grid() const { return grid_; }
    ParityClass parity() const { return parity_; }
    void set_parity(ParityClass p) { parity_ = p; }

    double& at(int i, int j) { return v_[static_cast<long>(j) * grid_.n1() + i]; }
    double at(int i, int j) const { return v_[static_cast<long>(j) * grid_.n1() + i]; }

    std::span<double> values() { return v_; }
    std::span<const double> values() const { return v_; }
    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }

    double mean() const;
    double sup() const;           // max |value|
    double max_value() const;
    double min_value() const;
    bool finite() const;

    /** Lp norm over the stored domain (p = 0 means the sup norm). Uses cell
     * area h1*h2 with half-weight wall rows on strips. */
    double lp_norm(double p) const;

    /** Largest pointwise violation of the declared parities. */
    double parity_violation() const;
    /** Project onto the declared parity class (exact antisymmetry/symmetry). */
    void symmetrize();

  private:
    TorusGrid grid_;
    ParityClass parity_;
    std::vector<double> v_;
};

struct VectorField {
    ScalarField c1;
    ScalarField c2;
};

/** Copy the x2 in [0,1] part of a doubled-torus field. */
ScalarField restrict_to_strip(const ScalarField& f);

/** Odd-in-x2 extension of a strip field to the doubled torus. Seam rows
 * x2 in {0,1} are forced to zero so the output is exactly antisymmetric
 * about both lines; interior values are copied with a sign flip. */
ScalarField extend_odd_x2(const ScalarField& f);

/** Sup over the grid of the centered finite-difference gradient magnitude
 * (one-sided second-order stencils at strip walls). Stencil width 2h. */
double grad_sup(const ScalarField& f);

} // namespace vssc

#endif

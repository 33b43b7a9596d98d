#ifndef VSSC_GRID_HPP
#define VSSC_GRID_HPP

#include "vssc/errors.hpp"

namespace vssc {

enum class Domain { DoubledTorus, Strip };

/** Uniform grid on the doubled torus [-1,1)^2 (period 2 in both directions)
 * or on the strip x2 in [0,1].
 *
 * n1, n2 always refer to the doubled-torus sample counts; a Strip grid is the
 * restriction of that grid to x2 in [0,1] and stores n2/2+1 rows (both wall
 * rows included). Grid lines hit the symmetry axes x1=0 and x2 in {0,1}
 * exactly, so parities can be enforced bitwise. */
class TorusGrid {
  public:
    TorusGrid(int n1, int n2, Domain kind);

    int n1() const { return n1_; }
    int n2() const { return n2_; }
    Domain kind() const { return kind_; }

    double h1() const { return 2.0 / n1_; }
    double h2() const { return 2.0 / n2_; }

    /** Number of x2 rows actually stored. */
    int rows() const { return kind_ == Domain::Strip ? n2_ / 2 + 1 : n2_; }
    int cols() const { return n1_; }
    long size() const { return static_cast<long>(rows()) * n1_; }

    double x1(int i) const { return -1.0 + i * h1(); }
    double x2(int j) const {
        return kind_ == Domain::Strip ? j * h2() : -1.0 + j * h2();
    }

    /** Column index mirrored across x1 = 0 (i=0 maps to itself: x1 = -1 = +1). */
    int mirror1(int i) const { return (n1_ - i) % n1_; }
    /** Row index mirrored across x2 = 0 (doubled torus only). */
    int mirror2(int j) const { return (n2_ - j) % n2_; }

    /** Column of x1 = 0. */
    int axis_col() const { return n1_ / 2; }
    /** Doubled-torus row of x2 = 0. */
    int zero_row() const { return n2_ / 2; }

    TorusGrid as_strip() const { return TorusGrid(n1_, n2_, Domain::Strip); }
    TorusGrid as_doubled() const { return TorusGrid(n1_, n2_, Domain::DoubledTorus); }

    bool operator==(const TorusGrid& o) const {
        return n1_ == o.n1_ && n2_ == o.n2_ && kind_ == o.kind_;
    }
    bool operator!=(const TorusGrid& o) const { return !(*this == o); }

  private:
    int n1_;
    int n2_;
    Domain kind_;
};

} // namespace vssc

#endif

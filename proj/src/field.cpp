#include "vssc/field.hpp"

#include <algorithm>
#include <cmath>

namespace vssc {

ScalarField::ScalarField(const TorusGrid& grid, ParityClass parity)
    : grid_(grid), parity_(parity), v_(grid.size(), 0.0) {}

double ScalarField::mean() const {
    // For strips, wall rows carry half weight (trapezoid in x2).
    double s = 0.0;
    const int n1 = grid_.n1(), R = grid_.rows();
    if (grid_.kind() == Domain::Strip) {
        double cells = 0.0;
        for (int j = 0; j < R; ++j) {
            const double w = (j == 0 || j == R - 1) ? 0.5 : 1.0;
            for (int i = 0; i < n1; ++i) s += w * at(i, j);
            cells += w * n1;
        }
        return s / cells;
    }
    for (double x : v_) s += x;
    return s / static_cast<double>(v_.size());
}

double ScalarField::sup() const {
    double m = 0.0;
    for (double x : v_) m = std::max(m, std::fabs(x));
    return m;
}

double ScalarField::max_value() const { return *std::max_element(v_.begin(), v_.end()); }
double ScalarField::min_value() const { return *std::min_element(v_.begin(), v_.end()); }

bool ScalarField::finite() const {
    for (double x : v_)
        if (!std::isfinite(x)) return false;
    return true;
}

double ScalarField::lp_norm(double p) const {
    if (p == 0.0) return sup();
    const int n1 = grid_.n1(), R = grid_.rows();
    const double cell = grid_.h1() * grid_.h2();
    double s = 0.0;
    for (int j = 0; j < R; ++j) {
        double w = 1.0;
        if (grid_.kind() == Domain::Strip && (j == 0 || j == R - 1)) w = 0.5;
        for (int i = 0; i < n1; ++i) s += w * std::pow(std::fabs(at(i, j)), p);
    }
    return std::pow(s * cell, 1.0 / p);
}

double ScalarField::parity_violation() const {
    const int n1 = grid_.n1(), R = grid_.rows();
    double worst = 0.0;
    if (parity_.x1 != Parity::None) {
        const double sgn = parity_.x1 == Parity::Odd ? -1.0 : 1.0;
        for (int j = 0; j < R; ++j)
            for (int i = 0; i < n1; ++i)
                worst = std::max(worst, std::fabs(at(i, j) - sgn * at(grid_.mirror1(i), j)));
    }
    if (parity_.x2 != Parity::None && grid_.kind() == Domain::DoubledTorus) {
        const double sgn = parity_.x2 == Parity::Odd ? -1.0 : 1.0;
        for (int j = 0; j < R; ++j)
            for (int i = 0; i < n1; ++i)
                worst = std::max(worst, std::fabs(at(i, j) - sgn * at(i, grid_.mirror2(j))));
    }
    return worst;
}

void ScalarField::symmetrize() {
    const int n1 = grid_.n1(), R = grid_.rows();
    if (parity_.x1 == Parity::Odd) {
        for (int j = 0; j < R; ++j) {
            for (int i = 1; i < n1 / 2; ++i) {
                const int k = grid_.mirror1(i);
                const double d = 0.5 * (at(i, j) - at(k, j));
                at(i, j) = d;
                at(k, j) = -d;
            }
            at(0, j) = 0.0;
            at(grid_.axis_col(), j) = 0.0;
        }
    } else if (parity_.x1 == Parity::Even) {
        for (int j = 0; j < R; ++j)
            for (int i = 1; i < n1 / 2; ++i) {
                const int k = grid_.mirror1(i);
                const double s = 0.5 * (at(i, j) + at(k, j));
                at(i, j) = s;
                at(k, j) = s;
            }
    }
    if (grid_.kind() != Domain::DoubledTorus) return;
    if (parity_.x2 == Parity::Odd) {
        for (int i = 0; i < n1; ++i) {
            for (int j = 1; j < grid_.n2() / 2; ++j) {
                const int k = grid_.mirror2(j);
                const double d = 0.5 * (at(i, j) - at(i, k));
                at(i, j) = d;
                at(i, k) = -d;
            }
            at(i, 0) = 0.0;
            at(i, grid_.zero_row()) = 0.0;
        }
    } else if (parity_.x2 == Parity::Even) {
        for (int i = 0; i < n1; ++i)
            for (int j = 1; j < grid_.n2() / 2; ++j) {
                const int k = grid_.mirror2(j);
                const double s = 0.5 * (at(i, j) + at(i, k));
                at(i, j) = s;
                at(i, k) = s;
            }
    }
}

ScalarField restrict_to_strip(const ScalarField& f) {
    if (f.grid().kind() != Domain::DoubledTorus)
        throw GridMismatch("restrict_to_strip: input is already a strip field");
    const TorusGrid& g = f.grid();
    ScalarField out(g.as_strip(), ParityClass{f.parity().x1, Parity::None});
    const int z = g.zero_row(), n2 = g.n2();
    for (int t = 0; t <= n2 / 2; ++t) {
        const int j = (z + t) % n2;
        for (int i = 0; i < g.n1(); ++i) out.at(i, t) = f.at(i, j);
    }
    return out;
}

ScalarField extend_odd_x2(const ScalarField& f) {
    if (f.grid().kind() != Domain::Strip)
        throw GridMismatch("extend_odd_x2: input must be a strip field");
    const TorusGrid& g = f.grid();
    ScalarField out(g.as_doubled(), ParityClass{f.parity().x1, Parity::Odd});
    const int z = g.zero_row(), n1 = g.n1(), n2 = g.n2();
    for (int i = 0; i < n1; ++i) {
        out.at(i, 0) = 0.0;  // x2 = -1 (= 1) seam
        out.at(i, z) = 0.0;  // x2 = 0 seam
    }
    for (int t = 1; t < n2 / 2; ++t) {
        for (int i = 0; i < n1; ++i) {
            const double v = f.at(i, t);
            out.at(i, z + t) = v;
            out.at(i, z - t) = -v;
        }
    }
    return out;
}

double grad_sup(const ScalarField& f) {
    const TorusGrid& g = f.grid();
    const int n1 = g.n1(), R = g.rows();
    const double ih1 = 1.0 / (2.0 * g.h1()), ih2 = 1.0 / (2.0 * g.h2());
    const bool strip = g.kind() == Domain::Strip;
    double worst = 0.0;
    for (int j = 0; j < R; ++j) {
        const int jm = strip ? j - 1 : (j + R - 1) % R;
        const int jp = strip ? j + 1 : (j + 1) % R;
        for (int i = 0; i < n1; ++i) {
            const int im = (i + n1 - 1) % n1, ip = (i + 1) % n1;
            const double g1 = (f.at(ip, j) - f.at(im, j)) * ih1;
            double g2;
            if (strip && j == 0)
                g2 = (-3.0 * f.at(i, 0) + 4.0 * f.at(i, 1) - f.at(i, 2)) * ih2;
            else if (strip && j == R - 1)
                g2 = (3.0 * f.at(i, R - 1) - 4.0 * f.at(i, R - 2) + f.at(i, R - 3)) * ih2;
            else
                g2 = (f.at(i, jp) - f.at(i, jm)) * ih2;
            const double m = g1 * g1 + g2 * g2;
            if (m > worst) worst = m;
        }
    }
    return std::sqrt(worst);
}

} // namespace vssc

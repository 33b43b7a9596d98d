#include "vssc/interp.hpp"

#include <algorithm>
#include <cmath>

namespace vssc {

double StripSampler::node(int i, int j) const {
    const TorusGrid& g = f_.grid();
    const int n1 = g.n1(), R = g.rows();
    i = ((i % n1) + n1) % n1;
    double sgn = 1.0;
    // reflect x2 index into [0, R-1]; each reflection flips sign for odd parity
    while (j < 0 || j > R - 1) {
        if (j < 0) j = -j;
        else j = 2 * (R - 1) - j;
        if (wp_ == WallParity::Odd) sgn = -sgn;
    }
    return sgn * f_.at(i, j);
}

double StripSampler::operator()(double x1, double x2) const {
    const TorusGrid& g = f_.grid();
    const double ci = (x1 + 1.0) / g.h1();
    const double rj = x2 / g.h2();
    const int i0 = static_cast<int>(std::floor(ci));
    const int j0 = static_cast<int>(std::floor(rj));
    const double t = ci - i0;
    const double s = rj - j0;

    // 4-point Lagrange weights at offset in [0,1] relative to node 0
    auto w = [](double u, double* c) {
        c[0] = -u * (u - 1.0) * (u - 2.0) / 6.0;
        c[1] = (u + 1.0) * (u - 1.0) * (u - 2.0) / 2.0;
        c[2] = -(u + 1.0) * u * (u - 2.0) / 2.0;
        c[3] = (u + 1.0) * u * (u - 1.0) / 6.0;
    };
    double cw[4], rw[4];
    w(t, cw);
    w(s, rw);

    double val = 0.0;
    for (int dj = -1; dj <= 2; ++dj) {
        double rowv = 0.0;
        for (int di = -1; di <= 2; ++di)
            rowv += cw[di + 1] * node(i0 + di, j0 + dj);
        val += rw[dj + 1] * rowv;
    }
    if (clip_) {
        const double c00 = node(i0, j0), c10 = node(i0 + 1, j0);
        const double c01 = node(i0, j0 + 1), c11 = node(i0 + 1, j0 + 1);
        const double lo = std::min(std::min(c00, c10), std::min(c01, c11));
        const double hi = std::max(std::max(c00, c10), std::max(c01, c11));
        val = std::clamp(val, lo, hi);
    }
    return val;
}

} // namespace vssc

#include "vssc/audits.hpp"

#include "vssc/bracket.hpp"
#include "vssc/curve.hpp"
#include "vssc/energy.hpp"
#include "vssc/greens.hpp"
#include "vssc/harmonic.hpp"
#include "vssc/keylemma.hpp"
#include "vssc/profile.hpp"
#include "vssc/run.hpp"
#include "vssc/spectral.hpp"
#include "vssc/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace vssc {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

CheckResult row(const std::string& suite, const std::string& name, bool pass,
                double value, double threshold, const std::string& note = "") {
    return CheckResult{suite, name, pass, value, threshold, note};
}

ScalarField eigenfield(const TorusGrid& g) {
    ScalarField f(g, ParityClass{Parity::Odd, Parity::Odd});
    for (int j = 0; j < g.rows(); ++j)
        for (int i = 0; i < g.n1(); ++i)
            f.at(i, j) = std::sin(kPi * g.x1(i)) * std::sin(kPi * g.x2(j));
    return f;
}

// discrete inner product of FD gradients over the strip
double grad_inner(const ScalarField& a, const ScalarField& b) {
    const TorusGrid& g = a.grid();
    const int n1 = g.n1(), R = g.rows();
    const double ih1 = 1.0 / (2.0 * g.h1()), ih2 = 1.0 / (2.0 * g.h2());
    double s = 0.0;
    for (int j = 1; j < R - 1; ++j) {
        for (int i = 0; i < n1; ++i) {
            const int im = (i + n1 - 1) % n1, ip = (i + 1) % n1;
            const double a1 = (a.at(ip, j) - a.at(im, j)) * ih1;
            const double b1 = (b.at(ip, j) - b.at(im, j)) * ih1;
            const double a2 = (a.at(i, j + 1) - a.at(i, j - 1)) * ih2;
            const double b2 = (b.at(i, j + 1) - b.at(i, j - 1)) * ih2;
            s += a1 * b1 + a2 * b2;
        }
    }
    return s * g.h1() * g.h2();
}

} // namespace

ScalarField fd_dirichlet_solve(const ScalarField& omega, double tol, int max_sweeps) {
    const TorusGrid& g = omega.grid();
    if (g.kind() != Domain::Strip) throw GridMismatch("fd_dirichlet_solve: strip expected");
    const int n1 = g.n1(), R = g.rows();
    const double h1 = g.h1(), h2 = g.h2();
    const double c1 = 1.0 / (h1 * h1), c2 = 1.0 / (h2 * h2);
    const double diag = 2.0 * (c1 + c2);
    const double w = 2.0 / (1.0 + std::sin(kPi * std::min(h1, h2) / 2.0));

    ScalarField phi(g, omega.parity());
    const double scale = std::max(omega.sup(), 1e-300);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double worst = 0.0;
        for (int color = 0; color < 2; ++color) {
            for (int j = 1; j < R - 1; ++j) {
                for (int i = (j + color) % 2; i < n1; i += 2) {
                    const int im = (i + n1 - 1) % n1, ip = (i + 1) % n1;
                    const double res = c1 * (phi.at(im, j) + phi.at(ip, j)) +
                                       c2 * (phi.at(i, j - 1) + phi.at(i, j + 1)) -
                                       diag * phi.at(i, j) - omega.at(i, j);
                    phi.at(i, j) += w * res / diag;
                    worst = std::max(worst, std::fabs(res));
                }
            }
        }
        if (worst < tol * scale * diag) break;
    }
    return phi;
}

double sample_doubled(const ScalarField& f, double x1, double x2) {
    const TorusGrid& g = f.grid();
    const double ci = (x1 + 1.0) / g.h1();
    const double rj = (x2 + 1.0) / g.h2();
    const int i0 = static_cast<int>(std::floor(ci));
    const int j0 = static_cast<int>(std::floor(rj));
    const double t = ci - i0, s = rj - j0;
    auto w = [](double u, double* c) {
        c[0] = -u * (u - 1.0) * (u - 2.0) / 6.0;
        c[1] = (u + 1.0) * (u - 1.0) * (u - 2.0) / 2.0;
        c[2] = -(u + 1.0) * u * (u - 2.0) / 2.0;
        c[3] = (u + 1.0) * u * (u - 1.0) / 6.0;
    };
    double cw[4], rw[4];
    w(t, cw);
    w(s, rw);
    const int n1 = g.n1(), n2 = g.n2();
    double val = 0.0;
    for (int dj = -1; dj <= 2; ++dj) {
        const int j = ((j0 + dj) % n2 + n2) % n2;
        double rowv = 0.0;
        for (int di = -1; di <= 2; ++di) {
            const int i = ((i0 + di) % n1 + n1) % n1;
            rowv += cw[di + 1] * f.at(i, j);
        }
        val += rw[dj + 1] * rowv;
    }
    return val;
}

ScalarField random_bandlimited_oddodd(const TorusGrid& doubled, int kmax,
                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    std::vector<double> c(static_cast<std::size_t>(kmax) * kmax);
    for (auto& v : c) v = amp(rng);
    ScalarField f(doubled, ParityClass{Parity::Odd, Parity::Odd});
    for (int j = 0; j < doubled.rows(); ++j) {
        const double x2 = doubled.x2(j);
        for (int i = 0; i < doubled.n1(); ++i) {
            const double x1 = doubled.x1(i);
            double v = 0.0;
            for (int k = 1; k <= kmax; ++k)
                for (int l = 1; l <= kmax; ++l)
                    v += c[static_cast<std::size_t>(k - 1) * kmax + (l - 1)] *
                         std::sin(kPi * k * x1) * std::sin(kPi * l * x2);
            f.at(i, j) = v;
        }
    }
    f.symmetrize();
    return f;
}

std::vector<CheckResult> suite_symmetry(const SimParams& p) {
    std::vector<CheckResult> out;
    const TorusGrid strip(p.n1, p.n2, Domain::Strip);
    SpectralWorkspace ws(strip.as_doubled());
    ScalarField f = build_profile(ProfileSpec::from(p), strip);

    out.push_back(row("symmetry", "profile_odd_bitwise", f.parity_violation() == 0.0,
                      f.parity_violation(), 0.0));

    ScalarField ext = extend_odd_x2(f);
    out.push_back(row("symmetry", "extension_antisymmetric_bitwise",
                      ext.parity_violation() == 0.0, ext.parity_violation(), 0.0));
    out.push_back(row("symmetry", "extension_mean_zero", std::fabs(ext.mean()) <= 1e-12,
                      std::fabs(ext.mean()), 1e-12));

    // round trip on a seam-vanishing field
    ScalarField fv = f;
    for (int i = 0; i < strip.n1(); ++i) {
        fv.at(i, 0) = 0.0;
        fv.at(i, strip.rows() - 1) = 0.0;
    }
    ScalarField back = restrict_to_strip(extend_odd_x2(fv));
    double rt = 0.0;
    for (int j = 0; j < strip.rows(); ++j)
        for (int i = 0; i < strip.n1(); ++i)
            rt = std::max(rt, std::fabs(back.at(i, j) - fv.at(i, j)));
    out.push_back(row("symmetry", "extend_restrict_roundtrip_bitwise", rt == 0.0, rt, 0.0));

    // parity drift of a short transported run, pre-symmetrization
    SimParams q = p;
    q.n1 = std::min(p.n1, 128);
    q.n2 = std::min(p.n2, 128);
    const TorusGrid small(q.n1, q.n2, Domain::Strip);
    SpectralWorkspace wss(small.as_doubled());
    ScalarField f2 = build_profile(ProfileSpec::from(q), small);
    for (double& v : f2.values()) v *= q.epsilon;
    SimState st(std::move(f2), wss);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        step(st, q.dt, wss);
        worst = std::max(worst, st.last_parity_violation);
    }
    out.push_back(row("symmetry", "transport_parity_drift_50_steps",
                      worst <= p.sym_tol, worst, p.sym_tol));
    return out;
}

std::vector<CheckResult> suite_elliptic(const SimParams& p) {
    std::vector<CheckResult> out;
    const TorusGrid strip(p.n1, p.n2, Domain::Strip);
    const TorusGrid dbl = strip.as_doubled();
    SpectralWorkspace ws(dbl);

    // eigenfunction: Lap psi = omega with psi = -omega/(2 pi^2)
    ScalarField om = eigenfield(dbl);
    ScalarField psi = ws.poisson(om);
    double err = 0.0;
    for (int j = 0; j < dbl.rows(); ++j)
        for (int i = 0; i < dbl.n1(); ++i)
            err = std::max(err, std::fabs(psi.at(i, j) + om.at(i, j) / (2 * kPi * kPi)));
    err *= 2 * kPi * kPi;  // relative to the peak of psi
    out.push_back(row("elliptic", "eigenfunction_poisson_relative", err <= 1e-12, err, 1e-12));

    ScalarField zero(dbl, ParityClass{Parity::Odd, Parity::Odd});
    out.push_back(row("elliptic", "zero_field_maps_to_zero",
                      ws.poisson(zero).sup() == 0.0, ws.poisson(zero).sup(), 0.0));

    // velocity of the eigenfunction (left-handed convention):
    // u1 = d2 psi = -sin cos/(2 pi), u2 = -d1 psi = +cos sin/(2 pi)
    VectorField U = ws.velocity(om);
    double verr = 0.0;
    for (int j = 0; j < dbl.rows(); ++j)
        for (int i = 0; i < dbl.n1(); ++i) {
            const double s1 = std::sin(kPi * dbl.x1(i)), c1 = std::cos(kPi * dbl.x1(i));
            const double s2 = std::sin(kPi * dbl.x2(j)), c2 = std::cos(kPi * dbl.x2(j));
            verr = std::max(verr, std::fabs(U.c1.at(i, j) + s1 * c2 / (2 * kPi)));
            verr = std::max(verr, std::fabs(U.c2.at(i, j) - c1 * s2 / (2 * kPi)));
        }
    verr *= 2 * kPi;
    out.push_back(row("elliptic", "eigenfunction_velocity_relative", verr <= 1e-11, verr, 1e-11));

    ScalarField rnd = random_bandlimited_oddodd(dbl, 8, p.seed);
    out.push_back(row("elliptic", "fft_roundtrip_relative",
                      ws.roundtrip_error(rnd) <= 1e-12, ws.roundtrip_error(rnd), 1e-12));
    const double div = ws.divergence_sup(ws.velocity(rnd)) / std::max(1.0, rnd.sup());
    out.push_back(row("elliptic", "velocity_divergence_sup", div <= p.div_tol, div, p.div_tol));

    // Dirichlet strip solve: edge zeros and FD-oracle agreement
    ScalarField f = build_profile(ProfileSpec::from(p), strip);
    for (double& v : f.values()) v *= p.epsilon;
    ScalarField phi = solve_dirichlet_strip(f, ws);
    double edge = 0.0;
    for (int i = 0; i < strip.n1(); ++i)
        edge = std::max({edge, std::fabs(phi.at(i, 0)), std::fabs(phi.at(i, strip.rows() - 1))});
    out.push_back(row("elliptic", "dirichlet_edge_values", edge <= 1e-12, edge, 1e-12));

    // order check on the smooth eigenfunction at two small resolutions
    double errs[2];
    for (int lvl = 0; lvl < 2; ++lvl) {
        const int n = 64 << lvl;
        const TorusGrid sg(n, n, Domain::Strip);
        SpectralWorkspace w2(sg.as_doubled());
        ScalarField es(sg, ParityClass{Parity::Odd, Parity::None});
        for (int j = 0; j < sg.rows(); ++j)
            for (int i = 0; i < sg.n1(); ++i)
                es.at(i, j) = std::sin(kPi * sg.x1(i)) * std::sin(kPi * sg.x2(j));
        ScalarField sp = solve_dirichlet_strip(es, w2);
        ScalarField fd = fd_dirichlet_solve(es, 1e-12);
        double e = 0.0;
        for (int j = 0; j < sg.rows(); ++j)
            for (int i = 0; i < sg.n1(); ++i)
                e = std::max(e, std::fabs(sp.at(i, j) - fd.at(i, j)));
        errs[lvl] = e;
    }
    const double order = errs[0] / std::max(errs[1], 1e-300);
    out.push_back(row("elliptic", "dirichlet_fd_oracle_order2", order >= 3.0 && order <= 5.5,
                      order, 4.0, "sup-error ratio n=64/n=128, expect ~4"));

    // profile solve vs FD oracle, absolute agreement at working resolution
    {
        const int n = std::min(p.n1, 256);
        const TorusGrid sg(n, n, Domain::Strip);
        SpectralWorkspace w2(sg.as_doubled());
        SimParams q = p;
        q.n1 = q.n2 = n;
        ScalarField fp = build_profile(ProfileSpec::from(q), sg);
        for (double& v : fp.values()) v *= p.epsilon;
        ScalarField sp = solve_dirichlet_strip(fp, w2);
        ScalarField fd = fd_dirichlet_solve(fp, 1e-11);
        double e = 0.0;
        for (int j = 0; j < sg.rows(); ++j)
            for (int i = 0; i < sg.n1(); ++i)
                e = std::max(e, std::fabs(sp.at(i, j) - fd.at(i, j)));
        const double tol = 25.0 * sg.h1() * sg.h1() * p.epsilon;
        out.push_back(row("elliptic", "dirichlet_fd_oracle_profile", e <= tol, e, tol,
                          "sup difference, O(h^2) scale"));
    }
    return out;
}

std::vector<CheckResult> suite_oracle(const SimParams& p) {
    std::vector<CheckResult> out;
    const int n = std::min(std::max(p.n1, 256), 256);
    const TorusGrid dbl(n, n, Domain::DoubledTorus);
    SpectralWorkspace ws(dbl);
    ScalarField om = random_bandlimited_oddodd(dbl, 8, p.seed);
    ScalarField psi = ws.poisson(om);

    std::mt19937_64 rng(p.seed + 1);
    std::uniform_real_distribution<double> U(-0.9, 0.9);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const double x1 = U(rng), x2 = U(rng);
        const double a = sample_doubled(psi, x1, x2);
        const double b = greens_point_eval(om, {x1, x2}, p.lattice_N);
        worst = std::max(worst, std::fabs(a - b));
    }
    worst /= std::max(om.sup(), 1e-300);
    out.push_back(row("oracle", "greens_vs_spectral_20pts", worst <= 1e-6, worst, 1e-6,
                      "sup |psi_fft - psi_lattice| / sup|omega|"));

    // eigenfunction point value: psi(1/4,1/4) = -1/(4 pi^2)
    ScalarField eig = eigenfield(dbl);
    const double gv = greens_point_eval(eig, {0.25, 0.25}, p.lattice_N);
    const double exact = -1.0 / (4.0 * kPi * kPi);
    const double ee = std::fabs(gv - exact) / std::fabs(exact);
    out.push_back(row("oracle", "greens_eigenfunction_point", ee <= 1e-6, ee, 1e-6));

    // lattice tail: doubling N moves the value by < 1e-8
    const double g32 = greens_point_eval(om, {0.3, 0.4}, 32);
    const double g64 = greens_point_eval(om, {0.3, 0.4}, 64);
    out.push_back(row("oracle", "lattice_tail_32_vs_64",
                      std::fabs(g64 - g32) <= 1e-8, std::fabs(g64 - g32), 1e-8));
    return out;
}

std::vector<CheckResult> suite_errorfield(const SimParams& p) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(p.seed + 2);
    std::uniform_real_distribution<double> amp(0.2, 1.0);
    std::uniform_int_distribution<int> mode(1, 8);

    double worst_parity = 0.0, worst_en = 0.0, worst_stab = 0.0;
    double worst_harmonic_ratio = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const int k = mode(rng);
        const double a = amp(rng);
        double cfit[2][2];  // [resolution][component]
        for (int lvl = 0; lvl < 2; ++lvl) {
            const int n = 256 << lvl;
            const TorusGrid sg(n, n, Domain::Strip);
            BoundaryData bd;
            bd.parity_x1 = Parity::Odd;
            bd.g.resize(n);
            for (int i = 0; i < n; ++i) bd.g[i] = a * std::sin(kPi * k * sg.x1(i));
            ScalarField F = harmonic_extension(bd, sg);
            VectorField e = error_field(F);
            worst_parity = std::max({worst_parity, e.c1.parity_violation(),
                                     e.c2.parity_violation()});
            for (int i = 0; i < n; ++i)
                worst_en = std::max(worst_en, std::fabs(e.c2.at(i, 0)));
            cfit[lvl][0] = error_slope_fit(e, 1, 0.5);
            cfit[lvl][1] = error_slope_fit(e, 2, 0.5);
        }
        for (int c = 0; c < 2; ++c)
            worst_stab = std::max(worst_stab,
                                  std::fabs(cfit[0][c] / cfit[1][c] - 1.0));

        // Schwarz reflection: odd x2-reflection is discretely harmonic, O(h^2)
        double res[2];
        for (int lvl = 0; lvl < 2; ++lvl) {
            const int n = 128 << lvl;
            const TorusGrid sg(n, n, Domain::Strip);
            BoundaryData bd;
            bd.parity_x1 = Parity::Odd;
            bd.g.resize(n);
            for (int i = 0; i < n; ++i) bd.g[i] = a * std::sin(kPi * k * sg.x1(i));
            ScalarField F = harmonic_extension(bd, sg);
            ScalarField ext = extend_odd_x2(F);
            const double ih1 = 1.0 / (sg.h1() * sg.h1()), ih2 = 1.0 / (sg.h2() * sg.h2());
            double r = 0.0;
            const int z = ext.grid().zero_row();
            for (int j = z - 2; j <= z + 2; ++j)
                for (int i = 0; i < n; ++i) {
                    const int im = (i + n - 1) % n, ip = (i + 1) % n;
                    const int jm = (j + ext.grid().n2() - 1) % ext.grid().n2();
                    const int jp = (j + 1) % ext.grid().n2();
                    r = std::max(r, std::fabs(
                        (ext.at(im, j) - 2 * ext.at(i, j) + ext.at(ip, j)) * ih1 +
                        (ext.at(i, jm) - 2 * ext.at(i, j) + ext.at(i, jp)) * ih2));
                }
            res[lvl] = r;
        }
        worst_harmonic_ratio = std::max(worst_harmonic_ratio,
                                        res[1] / std::max(res[0], 1e-300));
    }
    out.push_back(row("errorfield", "parity_bitwise", worst_parity == 0.0, worst_parity, 0.0));
    out.push_back(row("errorfield", "wall_normal_component_bitwise", worst_en == 0.0,
                      worst_en, 0.0));
    out.push_back(row("errorfield", "slope_fit_stable_10pct", worst_stab <= 0.1,
                      worst_stab, 0.1, "|C(256)/C(512) - 1| over 10 modes"));
    out.push_back(row("errorfield", "schwarz_reflection_order2",
                      worst_harmonic_ratio <= 0.5, worst_harmonic_ratio, 0.5,
                      "5-point residual ratio n=256/n=128, expect ~1/4"));

    // orthogonality and energy split on one representative pair
    {
        const TorusGrid sg(std::min(p.n1, 256), std::min(p.n2, 256), Domain::Strip);
        SpectralWorkspace ws(sg.as_doubled());
        SimParams q = p;
        q.n1 = sg.n1();
        q.n2 = sg.n2();
        ScalarField f = build_profile(ProfileSpec::from(q), sg);
        for (double& v : f.values()) v *= p.epsilon;
        ScalarField phi = solve_dirichlet_strip(f, ws);
        BoundaryData bd;
        bd.parity_x1 = Parity::Odd;
        bd.g.resize(sg.n1());
        for (int i = 0; i < sg.n1(); ++i) bd.g[i] = 0.3 * std::sin(kPi * sg.x1(i));
        ScalarField F = harmonic_extension(bd, sg);
        const double ip = grad_inner(phi, F);
        const double na = std::sqrt(grad_inner(phi, phi));
        const double nb = std::sqrt(grad_inner(F, F));
        const double rel = std::fabs(ip) / (na * nb);
        const double otol = 300.0 * sg.h1() * sg.h1();
        out.push_back(row("errorfield", "gradient_orthogonality", rel <= otol, rel, otol,
                          "normalized inner product, O(h^2) scale"));

        VectorField U = biot_savart(f, ws);
        VectorField e = error_field(F);
        VectorField sum{U.c1, U.c2};
        for (int j = 0; j < sg.rows(); ++j)
            for (int i = 0; i < sg.n1(); ++i) {
                sum.c1.at(i, j) += e.c1.at(i, j);
                sum.c2.at(i, j) += e.c2.at(i, j);
            }
        const double ku = kinetic_energy(U), ke = kinetic_energy(e), ks = kinetic_energy(sum);
        const double split = std::fabs(ks - ku - ke) / std::max(ks, 1e-300);
        out.push_back(row("errorfield", "energy_split", split <= 2e-2, split, 2e-2,
                          "|K(U+e) - K(U) - K(e)| / K(U+e)"));
    }
    return out;
}

std::vector<CheckResult> suite_profile(const SimParams& p) {
    std::vector<CheckResult> out;
    const TorusGrid strip(p.n1, p.n2, Domain::Strip);
    SpectralWorkspace ws(strip.as_doubled());
    ScalarField f = build_profile(ProfileSpec::from(p), strip);

    // plateau value at the midpoint
    const double mid = 0.5 * (p.kappa_m() + 1.0 - p.delta);
    const int im = static_cast<int>(std::lround((mid + 1.0) / strip.h1()));
    const int jm = strip.rows() / 2;
    out.push_back(row("profile", "plateau_equals_one", f.at(im, jm) == 1.0,
                      f.at(im, jm), 1.0));
    double axis = 0.0;
    for (int j = 0; j < strip.rows(); ++j)
        axis = std::max(axis, std::fabs(f.at(strip.axis_col(), j)));
    out.push_back(row("profile", "axis_zero", axis == 0.0, axis, 0.0));

    const double area = profile_exceptional_area(f);
    const double budget = 2.0 * p.delta + 2.0 * p.taper_x2;
    out.push_back(row("profile", "exceptional_area_budget", area < budget, area, budget));

    double rng01 = std::min(f.min_value() + 1.0, 1.0 - f.max_value());
    out.push_back(row("profile", "range_pm1", rng01 >= 0.0, rng01, 0.0,
                      "min distance of range from [-1,1]"));

    // curl consistency through the spectral algebra
    ScalarField ext = extend_odd_x2(f);
    for (double& v : ext.values()) v *= p.epsilon;
    ScalarField lap = ws.laplacian(ws.poisson(ext));
    double cerr = 0.0;
    for (int j = 0; j < ext.grid().rows(); ++j)
        for (int i = 0; i < ext.grid().n1(); ++i)
            cerr = std::max(cerr, std::fabs(lap.at(i, j) - ext.at(i, j)));
    out.push_back(row("profile", "curl_consistency", cerr <= 1e-3 * p.epsilon, cerr,
                      1e-3 * p.epsilon, "sup |Lap psi - omega|"));

    // energy budget and gate
    VectorField v0 = make_velocity(f, 1.0, ws);
    const double C1t = kinetic_energy(v0, Quadrature::Trapezoid);
    const double C1s = kinetic_energy(v0, Quadrature::Gregory);
    const double agr = std::fabs(C1t - C1s) / C1t;
    out.push_back(row("profile", "kinetic_quadrature_agreement", agr <= 1e-6, agr, 1e-6,
                      "trapezoid vs Gregory"));
    EnergyBudget gate = epsilon_gate(C1t, p.sigma);
    out.push_back(row("profile", "epsilon_gate_value", gate.epsilon0 > 0.0,
                      gate.epsilon0, 0.0, "epsilon0 = sqrt(sigma/(20 C1))"));
    const double K0 = C1t * p.epsilon * p.epsilon;
    const bool gate_consistent = !gate.accepts(p.epsilon) || K0 <= p.sigma / 20.0 + 1e-12;
    out.push_back(row("profile", "gate_energy_consistency", gate_consistent, K0,
                      p.sigma / 20.0, "eps < eps0 implies K0 <= sigma/20"));
    return out;
}

std::vector<CheckResult> suite_geometry(const SimParams& p) {
    std::vector<CheckResult> out;
    PolyCurve flat;
    for (int k = 0; k < 16; ++k) flat.vertices.push_back({-1.0 + 2.0 * k / 16, 2.0});
    const double lf = curve_length(flat);
    out.push_back(row("geometry", "flat_length", std::fabs(lf - 2.0) <= 1e-12, lf, 2.0));

    PolyCurve saw;
    saw.vertices = {{-1.0, 2.0}, {0.0, 1.5}, {1.0, 2.0}};
    constexpr double sqrt5 = 2.2360679774997896;
    const double ls = curve_length(saw);
    out.push_back(row("geometry", "sawtooth_length_sqrt5", std::fabs(ls - sqrt5) <= 1e-12,
                      ls, sqrt5));

    auto vf = confinement_check(flat, 2.05);
    out.push_back(row("geometry", "flat_confinement",
                      vf.inside_band && vf.within_budget && vf.implication_holds,
                      vf.length, 2.05));
    auto vs = confinement_check(saw, 2.05);
    out.push_back(row("geometry", "sawtooth_exits_band",
                      !vs.inside_band && !vs.within_budget && vs.implication_holds,
                      vs.length, 2.05));

    // randomized sawtooth family: exits band and meets x2=2  =>  length >= sqrt5
    std::mt19937_64 rng(p.seed + 3);
    std::uniform_real_distribution<double> dy(-0.6, 0.6);
    std::uniform_int_distribution<int> segs(3, 24);
    long counterexamples = 0, exercised = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        PolyCurve c;
        const int K = segs(rng);
        bool touch2 = false;
        for (int k = 0; k < K; ++k) {
            double y = 2.0 + dy(rng);
            if (k == K / 2) {
                y = 2.0;  // guarantee the Gamma-candidate precondition
                touch2 = true;
            }
            c.vertices.push_back({-1.0 + 2.0 * k / K, y});
        }
        if (!touch2) continue;
        double ymin = 3.0, ymax = 0.0;
        for (auto& v : c.vertices) {
            ymin = std::min(ymin, v[1]);
            ymax = std::max(ymax, v[1]);
        }
        const bool exits = ymin <= 1.5 || ymax >= 2.5;
        if (!exits) continue;
        ++exercised;
        if (curve_length(c) < sqrt5 - 1e-12) ++counterexamples;
    }
    out.push_back(row("geometry", "random_sawtooth_isoperimetric",
                      counterexamples == 0 && exercised > 50,
                      static_cast<double>(counterexamples), 0.0,
                      "exercised " + std::to_string(exercised) + " exiting curves"));

    // potential-energy minimality under area-preserving graph perturbations
    std::uniform_real_distribution<double> pert(-0.3, 0.3);
    const double Pflat = potential_energy_under(flat);
    long pviol = 0;
    for (int trial = 0; trial < 200; ++trial) {
        PolyCurve c;
        const int K = 24;
        std::vector<double> ys(K);
        double mean = 0.0;
        for (int k = 0; k < K; ++k) {
            ys[k] = pert(rng);
            mean += ys[k];
        }
        mean /= K;
        for (int k = 0; k < K; ++k)
            c.vertices.push_back({-1.0 + 2.0 * k / K, 2.0 + ys[k] - mean});
        if (potential_energy_under(c) < Pflat - 1e-9) ++pviol;
    }
    out.push_back(row("geometry", "potential_energy_minimality", pviol == 0,
                      static_cast<double>(pviol), 0.0,
                      "area-preserving perturbations of the flat interface"));

    // flat interface with gravity: P = 4
    out.push_back(row("geometry", "flat_potential_energy",
                      std::fabs(Pflat - 4.0) <= 1e-12, Pflat, 4.0));
    return out;
}

std::vector<CheckResult> suite_keylemma(const SimParams& p) {
    std::vector<CheckResult> out;
    const TorusGrid strip(p.n1, p.n2, Domain::Strip);
    SpectralWorkspace ws(strip.as_doubled());
    ScalarField f = build_profile(ProfileSpec::from(p), strip);
    ScalarField om = f;
    for (double& v : om.values()) v *= p.epsilon;
    VectorField u = biot_savart(om, ws);
    const double C1 = kinetic_energy(make_velocity(f, 1.0, ws));
    const double K0 = C1 * p.epsilon * p.epsilon;

    std::mt19937_64 rng(p.seed + 4);
    const double xlo = 2.5 * strip.h1(), xhi = 0.34;
    std::uniform_real_distribution<double> px(xlo, xhi);
    auto draw_samples = [&](int count) {
        std::vector<KeyLemmaSample> v;
        // anchors guarantee the decade span in x2/x1
        for (auto [x1, x2] : {std::pair{xlo, xhi}, std::pair{xhi, xlo}}) {
            v.push_back(extract_B(om, u, {x1, x2}, 1));
            v.push_back(extract_B(om, u, {x1, x2}, 2));
        }
        while (static_cast<int>(v.size()) < count) {
            const double x1 = px(rng), x2 = px(rng);
            if (x1 * x1 + x2 * x2 >= 0.25) continue;
            v.push_back(extract_B(om, u, {x1, x2}, 1));
            v.push_back(extract_B(om, u, {x1, x2}, 2));
        }
        return v;
    };

    auto samples = draw_samples(30);
    // decomposition identity: reassemble u_j from (q, B)
    double iderr = 0.0;
    for (const auto& s : samples) {
        const double sign = s.j == 1 ? -1.0 : 1.0;
        const double xj = s.j == 1 ? s.x[0] : s.x[1];
        const double re = sign * (4.0 / kPi) * (s.q + s.B) * xj;
        iderr = std::max(iderr, std::fabs(re - s.u_j));
    }
    out.push_back(row("keylemma", "decomposition_identity", iderr <= 1e-12, iderr, 1e-12));

    double C0_small = fit_remainder_constant(samples, K0, om.sup());
    auto big = draw_samples(300);
    double C0_big = fit_remainder_constant(big, K0, om.sup());
    const double enlarge = C0_big / std::max(C0_small, 1e-300);
    out.push_back(row("keylemma", "c0_sample_enlargement_factor2", enlarge <= 2.0,
                      enlarge, 2.0, "C0(300 samples) / C0(30 samples)"));
    out.push_back(row("keylemma", "c0_value", C0_small > 0.0, C0_small, 0.0,
                      "joint C0 fit at t=0"));

    const double C3 = c3_constant();
    out.push_back(row("keylemma", "c3_constant_finite", C3 > 0.0 && C3 < 1.0, C3, 1.0,
                      "max rectangle integral"));
    return out;
}

std::vector<CheckResult> suite_sector(const SimParams& p) {
    std::vector<CheckResult> out;

    // fixture: delta = 0.01, eps = 1, no taper (the guard cannot hold otherwise)
    SimParams q = p;
    q.epsilon = 1.0;
    q.delta = 0.01;
    q.kappa = 0.005;
    q.taper_x2 = 0.0;
    q.n1 = std::min(p.n1, 512);
    q.n2 = std::min(p.n2, 512);
    const double floor_val = sector_floor(q.epsilon, q.delta);
    out.push_back(row("sector", "paper_floor_value",
                      std::fabs(floor_val - 0.11994) <= 5e-5, floor_val, 0.11994,
                      "(eps pi/48)(log(1/delta) - 2 log 4) at delta=0.01, eps=1"));

    const TorusGrid strip(q.n1, q.n2, Domain::Strip);
    ScalarField f = build_profile(ProfileSpec::from(q), strip);
    ScalarField om = f;
    for (double& v : om.values()) v *= q.epsilon;
    const double area = exceptional_area(om, q.epsilon, q.omega_tol);
    out.push_back(row("sector", "fixture_exceptional_area_guard", area <= 2.0 * q.delta,
                      area, 2.0 * q.delta));

    double worst_q = 0.0;
    bool first = true;
    for (int j = 0; j < strip.rows(); ++j) {
        const double x2 = strip.x2(j);
        for (int i = strip.axis_col(); i < strip.n1(); ++i) {
            const double x1 = strip.x1(i);
            if (x1 * x1 + x2 * x2 > q.delta * q.delta) continue;
            if (2 * x1 >= 1.0 || 2 * x2 >= 1.0) continue;
            const double qv = q_integral(om, {x1, x2});
            if (first || qv < worst_q) worst_q = qv;
            first = false;
        }
    }
    out.push_back(row("sector", "fixture_q_above_floor",
                      !first && worst_q >= floor_val * 0.99, worst_q, floor_val * 0.99,
                      "min q_integral over B_delta samples"));

    // default-scenario guarded check at t = 0
    const TorusGrid dstrip(p.n1, p.n2, Domain::Strip);
    ScalarField fd = build_profile(ProfileSpec::from(p), dstrip);
    ScalarField omd = fd;
    for (double& v : omd.values()) v *= p.epsilon;
    const double areal = exceptional_area(omd, p.epsilon, p.omega_tol);
    const double dfloor = sector_floor(p.epsilon, p.delta);
    bool guarded_pass = true;
    double min_q = 0.0;
    if (areal <= 2.0 * p.delta) {
        bool f2 = true;
        for (int j = 0; j < dstrip.rows(); ++j) {
            const double x2 = dstrip.x2(j);
            for (int i = dstrip.axis_col(); i < dstrip.n1(); ++i) {
                const double x1 = dstrip.x1(i);
                if (x1 * x1 + x2 * x2 > p.delta * p.delta) continue;
                if (2 * x1 >= 1.0 || 2 * x2 >= 1.0) continue;
                const double qv = q_integral(omd, {x1, x2});
                if (f2 || qv < min_q) min_q = qv;
                f2 = false;
            }
        }
        guarded_pass = f2 || min_q >= dfloor - 0.01 * std::fabs(dfloor) - 1e-12;
    }
    out.push_back(row("sector", "default_guarded_floor", guarded_pass, min_q, dfloor,
                      areal <= 2 * p.delta ? "guard held at t=0" : "guard not engaged"));
    return out;
}

std::vector<std::string> all_suite_names() {
    return {"symmetry", "elliptic", "oracle", "errorfield",
            "profile", "geometry", "keylemma", "sector"};
}

std::vector<CheckResult> run_suites(const SimParams& p,
                                    const std::vector<std::string>& enabled) {
    auto want = [&](const std::string& s) {
        if (enabled.empty()) return true;
        return std::find(enabled.begin(), enabled.end(), s) != enabled.end();
    };
    std::vector<CheckResult> all;
    auto append = [&](const std::string& name, auto&& fn) {
        if (!want(name)) return;
        try {
            for (auto& r : fn(p)) all.push_back(std::move(r));
        } catch (const Error& e) {
            all.push_back(CheckResult{name, "suite_exception", false, 0.0, 0.0, e.what()});
        }
    };
    append("symmetry", suite_symmetry);
    append("elliptic", suite_elliptic);
    append("oracle", suite_oracle);
    append("errorfield", suite_errorfield);
    append("profile", suite_profile);
    append("geometry", suite_geometry);
    append("keylemma", suite_keylemma);
    append("sector", suite_sector);
    return all;
}

} // namespace vssc

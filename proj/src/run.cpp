#include "vssc/run.hpp"

#include "vssc/harmonic.hpp"

#include <cmath>

namespace vssc {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

double grad_sup_ball(const VectorField& v, double radius) {
    // centered FD in x1, one-sided at walls in x2, restricted to B_radius
    const TorusGrid& g = v.c1.grid();
    const int n1 = g.n1(), R = g.rows();
    const double ih1 = 1.0 / (2.0 * g.h1()), ih2 = 1.0 / (2.0 * g.h2());
    double worst = 0.0;
    for (int j = 0; j < R; ++j) {
        const double x2 = g.x2(j);
        for (int i = 0; i < n1; ++i) {
            const double x1 = g.x1(i);
            if (x1 * x1 + x2 * x2 >= radius * radius) continue;
            for (const ScalarField* c : {&v.c1, &v.c2}) {
                const int im = (i + n1 - 1) % n1, ip = (i + 1) % n1;
                const double d1 = (c->at(ip, j) - c->at(im, j)) * ih1;
                double d2;
                if (j == 0)
                    d2 = (-3.0 * c->at(i, 0) + 4.0 * c->at(i, 1) - c->at(i, 2)) * ih2;
                else if (j == R - 1)
                    d2 = (3.0 * c->at(i, R - 1) - 4.0 * c->at(i, R - 2) + c->at(i, R - 3)) * ih2;
                else
                    d2 = (c->at(i, j + 1) - c->at(i, j - 1)) * ih2;
                worst = std::max(worst, std::max(std::fabs(d1), std::fabs(d2)));
            }
        }
    }
    return worst;
}

} // namespace

InitialData build_initial_data(const SimParams& p, SpectralWorkspace& ws) {
    const TorusGrid strip(p.n1, p.n2, Domain::Strip);
    ScalarField f = build_profile(ProfileSpec::from(p), strip);
    VectorField v0 = make_velocity(f, 1.0, ws);
    const double C1 = kinetic_energy(v0);
    EnergyBudget budget = epsilon_gate(C1, p.sigma);
    budget.K0 = C1 * p.epsilon * p.epsilon;
    VectorField u0 = v0;
    for (double& x : u0.c1.values()) x *= p.epsilon;
    for (double& x : u0.c2.values()) x *= p.epsilon;
    return InitialData{std::move(f), std::move(u0), budget};
}

std::optional<VectorField> build_injection(const InjectionSpec& spec,
                                           const TorusGrid& strip_grid, double K0) {
    if (spec.target_c <= 0.0 || spec.modes.empty()) return std::nullopt;
    BoundaryData bd;
    bd.parity_x1 = Parity::Odd;
    bd.g.assign(strip_grid.n1(), 0.0);
    for (int i = 0; i < strip_grid.n1(); ++i) {
        const double x1 = strip_grid.x1(i);
        for (const auto& [k, amp] : spec.modes) bd.g[i] += amp * std::sin(kPi * k * x1);
    }
    ScalarField F = harmonic_extension(bd, strip_grid);
    VectorField e = error_field(F);
    const double cur = grad_sup_ball(e, 0.5);
    if (cur <= 0.0) return std::nullopt;
    const double scale = spec.target_c * std::sqrt(K0) / cur;
    for (double& x : e.c1.values()) x *= scale;
    for (double& x : e.c2.values()) x *= scale;
    return e;
}

double sector_min_ratio(const VectorField& u, double delta) {
    const TorusGrid& g = u.c1.grid();
    double best = 0.0;
    bool any = false;
    for (int j = 0; j < g.rows(); ++j) {
        const double x2 = g.x2(j);
        for (int i = g.axis_col() + 1; i < g.n1(); ++i) {
            const double x1 = g.x1(i);
            if (x2 > x1 || x1 * x1 + x2 * x2 > delta * delta) continue;
            const double r = -u.c1.at(i, j) / x1;
            if (!any || r < best) best = r;
            any = true;
        }
    }
    return any ? best : 0.0;
}

double exceptional_area(const ScalarField& omega, double eps, double tol) {
    const TorusGrid& g = omega.grid();
    const double cell = g.h1() * g.h2();
    long count = 0;
    for (int j = 0; j < g.rows(); ++j)
        for (int i = g.axis_col(); i < g.n1(); ++i)
            if (std::fabs(omega.at(i, j) - eps) > tol * eps) ++count;
    return count * cell;
}

TrapezoidVerdict trapezoid_check(const ScalarField& omega, double a, double b,
                                 double eps, double omega_tol) {
    if (!(0.0 < a && a < b && b < 1.0)) throw EmptyRegion("need 0 < a < b < 1");
    const TorusGrid& g = omega.grid();
    TrapezoidVerdict v;
    for (int i = g.axis_col() + 1; i < g.n1(); ++i) {
        const double x1 = g.x1(i);
        if (!(a < x1 && x1 < b)) continue;
        for (int j = 0; j < g.rows(); ++j) {
            const double x2 = g.x2(j);
            if (x2 > x1) break;
            v.cells += 1;
            if (std::fabs(omega.at(i, j) - eps) > omega_tol * eps) v.violations += 1;
        }
    }
    if (v.cells == 0) throw EmptyRegion("no grid point in O(a,b)");
    v.fraction = static_cast<double>(v.violations) / static_cast<double>(v.cells);
    v.pass = v.violations == 0;
    return v;
}

RunResult run_scenario(const SimParams& p, const RunOptions& opts,
                       const CheckpointSink& sink,
                       const std::optional<ResumePoint>& resume) {
    p.require_valid();
    const TorusGrid strip(p.n1, p.n2, Domain::Strip);
    SpectralWorkspace ws(strip.as_doubled());

    InitialData init = build_initial_data(p, ws);
    if (opts.strict_gate && !init.budget.accepts(p.epsilon))
        throw ValidationError("strict gate: epsilon >= epsilon0 = " +
                              std::to_string(init.budget.epsilon0));

    ScalarField omega0 = init.f;
    for (double& x : omega0.values()) x *= p.epsilon;

    SimState state(std::move(omega0), ws);
    Tracer tracer;
    tracer.label = "boundary";
    tracer.bottom = true;
    tracer.position = {p.delta, 0.0};
    BracketState bracket(p.kappa_m(), p.kappa);
    bool bracket_alive = true;

    if (resume) {
        if (resume->checkpoint.field.grid() != strip)
            throw CheckpointError("resume grid does not match the configuration");
        ScalarField om = resume->checkpoint.field;
        om.set_parity(ParityClass{Parity::Odd, Parity::None});
        state = SimState(std::move(om), ws);
        state.step_count = resume->aux.step;
        state.t = resume->aux.time;
        bracket.a = resume->aux.a;
        bracket.b = resume->aux.b;
        bracket.t = resume->aux.time;
        bracket.collapsed = resume->aux.bracket_collapsed;
        bracket_alive = !bracket.collapsed;
        bracket.history.clear();
        bracket.record();
        if (!resume->aux.tracers.empty()) tracer.position = resume->aux.tracers[0];
    }

    if (auto e = build_injection(opts.injection, strip, init.budget.K0))
        state.set_injected_e(std::move(*e));

    RunResult out{GrowthReport{}, false, init.budget,
                  std::max(init.u0.c1.sup(), init.u0.c2.sup()) / p.epsilon,
                  Checkpoint{state.omega, state.t, p.epsilon}, AuxState{}};
    out.report.epsilon = p.epsilon;
    out.report.stencil = 2.0 * std::max(strip.h1(), strip.h2());

    const long out_every = std::max<long>(1, std::lround(opts.output_dt / p.dt));
    const long ck_every = std::max<long>(1, std::lround(opts.checkpoint_dt / p.dt));
    const auto total_steps = static_cast<std::uint64_t>(std::llround(p.t_end / p.dt));

    double parity_window = 0.0;
    auto sample = [&]() {
        GrowthSample s;
        s.t = state.t;
        s.grad_sup = grad_sup(state.omega);
        s.eta1 = tracer.position[0];
        s.a = bracket.a;
        s.b = bracket.b;
        s.log_b_over_a = std::log(bracket.b / bracket.a);
        s.kinetic = kinetic_energy(state.U);
        s.l1 = state.omega.lp_norm(1);
        s.l2 = state.omega.lp_norm(2);
        s.l4 = state.omega.lp_norm(4);
        s.linf = state.omega.sup();
        s.parity_violation = parity_window;
        s.exceptional_area = exceptional_area(state.omega, p.epsilon, p.omega_tol);
        try {
            const TrapezoidVerdict tv =
                trapezoid_check(state.omega, bracket.a, bracket.b, p.epsilon, p.omega_tol);
            s.trapezoid_cells = tv.cells;
            s.trapezoid_violations = tv.violations;
        } catch (const EmptyRegion&) {
            s.trapezoid_cells = 0;
            s.trapezoid_violations = 0;
        }
        s.sector_min_ratio = sector_min_ratio(state.vt, p.delta);
        s.cfl = state.last_cfl;
        out.report.samples.push_back(s);
        parity_window = 0.0;
    };

    auto checkpoint_now = [&]() {
        AuxState aux;
        aux.time = state.t;
        aux.step = state.step_count;
        aux.a = bracket.a;
        aux.b = bracket.b;
        aux.bracket_collapsed = bracket.collapsed;
        aux.tracers.push_back(tracer.position);
        if (sink) sink(Checkpoint{state.omega, state.t, p.epsilon}, aux, state.step_count);
        return aux;
    };

    if (state.step_count == 0) sample();

    while (state.step_count < total_steps) {
        // tracer and bracket advance against the velocity the field step uses
        trace_step(tracer, state, p.dt);
        if (bracket_alive) {
            try {
                bracket_step(bracket, state, p.dt);
            } catch (const BracketCollapse&) {
                bracket_alive = false;
                out.bracket_collapsed = true;
            }
        }
        step(state, p.dt, ws, opts.step);
        parity_window = std::max(parity_window, state.last_parity_violation);
        if (state.step_count % out_every == 0) sample();
        if (state.step_count % ck_every == 0 && state.step_count < total_steps)
            checkpoint_now();
    }
    if (total_steps % out_every != 0 && total_steps > 0) sample();

    out.final_aux = checkpoint_now();
    out.final_state = Checkpoint{state.omega, state.t, p.epsilon};
    out.bracket_collapsed = out.bracket_collapsed || bracket.collapsed;
    return out;
}

} // namespace vssc

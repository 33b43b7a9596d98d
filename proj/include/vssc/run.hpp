#ifndef VSSC_RUN_HPP
#define VSSC_RUN_HPP

#include "vssc/bracket.hpp"
#include "vssc/checkpoint.hpp"
#include "vssc/energy.hpp"
#include "vssc/params.hpp"
#include "vssc/profile.hpp"
#include "vssc/report.hpp"
#include "vssc/stepper.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace vssc {

/** Error-injection request: boundary modes g = sum amp_k sin(pi k x1),
 * scaled so sup |grad e| over B_1/2 cap Omega equals target_c * sqrt(K0). */
struct InjectionSpec {
    std::vector<std::pair<int, double>> modes;  // (k, amplitude)
    double target_c = 0.0;                      // 0 disables injection
};

struct RunOptions {
    double output_dt = 0.25;
    double checkpoint_dt = 2.0;
    bool strict_gate = false;
    StepOptions step;
    InjectionSpec injection;
};

struct ResumePoint {
    Checkpoint checkpoint;
    AuxState aux;
};

struct RunResult {
    GrowthReport report;
    bool bracket_collapsed = false;
    EnergyBudget budget;     // measured C1, epsilon0, K0
    double sup_v0 = 0.0;     // for CFL diagnostics
    Checkpoint final_state;  // omega at t_end
    AuxState final_aux;
};

using CheckpointSink =
    std::function<void(const Checkpoint&, const AuxState&, std::uint64_t)>;

/** Initial data of the scenario: f, u0 = eps * grad-perp(phi), and the
 * measured energy budget. */
struct InitialData {
    ScalarField f;
    VectorField u0;
    EnergyBudget budget;
};
InitialData build_initial_data(const SimParams& p, SpectralWorkspace& ws);

/** Full scenario run: initialize from the params (or resume), step to t_end,
 * record the growth report at the output cadence, hand checkpoints to the
 * sink. Throws ValidationError when strict_gate is set and eps >= eps0. */
RunResult run_scenario(const SimParams& p, const RunOptions& opts,
                       const CheckpointSink& sink = {},
                       const std::optional<ResumePoint>& resume = std::nullopt);

/** min over grid points of B_delta cap {0 < x2 <= x1} of -u1/x1. */
double sector_min_ratio(const VectorField& u, double delta);

/** |{x in Omega+ : |omega - eps| > tol*eps}| by cell counting. */
double exceptional_area(const ScalarField& omega, double eps, double tol);

struct TrapezoidVerdict {
    long cells = 0;
    long violations = 0;
    double fraction = 0.0;
    bool pass = false;  // nonempty and violation-free
};

/** Fraction of grid cells in O(a,b) = {a < x1 < b, 0 <= x2 <= x1} whose
 * vorticity strays from eps by more than tol*eps. Throws EmptyRegion when
 * the region holds no grid point. */
TrapezoidVerdict trapezoid_check(const ScalarField& omega, double a, double b,
                                 double eps, double omega_tol);

/** Build the injected error field for a spec (empty optional when disabled). */
std::optional<VectorField> build_injection(const InjectionSpec& spec,
                                           const TorusGrid& strip_grid, double K0);

} // namespace vssc

#endif

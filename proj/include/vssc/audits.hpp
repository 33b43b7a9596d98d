#ifndef VSSC_AUDITS_HPP
#define VSSC_AUDITS_HPP

#include "vssc/field.hpp"
#include "vssc/params.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace vssc {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    double value = 0.0;      // measured quantity
    double threshold = 0.0;  // pass bound (direction depends on the check)
    std::string note;
};

/** t = 0 verification suites (parity, elliptic exactness, oracle equivalence,
 * error-field class, profile/gate, geometry lemmas, key-lemma decomposition,
 * sector bound fixture). Each returns one row per check. */
std::vector<CheckResult> suite_symmetry(const SimParams& p);
std::vector<CheckResult> suite_elliptic(const SimParams& p);
std::vector<CheckResult> suite_oracle(const SimParams& p);
std::vector<CheckResult> suite_errorfield(const SimParams& p);
std::vector<CheckResult> suite_profile(const SimParams& p);
std::vector<CheckResult> suite_geometry(const SimParams& p);
std::vector<CheckResult> suite_keylemma(const SimParams& p);
std::vector<CheckResult> suite_sector(const SimParams& p);

/** All suites, in a stable order. */
std::vector<CheckResult> run_suites(const SimParams& p,
                                    const std::vector<std::string>& enabled);
std::vector<std::string> all_suite_names();

/** Independent second-order 5-point Dirichlet solve on the strip
 * (red-black SOR); the cross-check oracle for the spectral path. */
ScalarField fd_dirichlet_solve(const ScalarField& omega, double tol = 1e-10,
                               int max_sweeps = 20000);

/** Periodic bicubic point evaluation of a doubled-torus field. */
double sample_doubled(const ScalarField& f, double x1, double x2);

/** Random band-limited odd-odd field on the doubled torus (modes <= kmax). */
ScalarField random_bandlimited_oddodd(const TorusGrid& doubled, int kmax,
                                      std::uint64_t seed);

} // namespace vssc

#endif

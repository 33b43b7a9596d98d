#include "vssc/params.hpp"

#include "vssc/errors.hpp"

#include <cmath>

namespace vssc {

double SimParams::kappa_m() const { return std::pow(kappa, m); }

std::vector<std::string> SimParams::validate() const {
    std::vector<std::string> bad;
    if (!(epsilon > 0.0)) bad.push_back("epsilon > 0 is required");
    if (!(sigma > 0.0)) bad.push_back("sigma > 0 is required");
    if (!(0.0 < kappa && kappa < delta && delta < 0.5))
        bad.push_back("0 < kappa < delta < 1/2 is required");
    if (m < 1) bad.push_back("m must be a positive integer");
    if (!(dt > 0.0)) bad.push_back("dt > 0 is required");
    if (t_end < 0.0) bad.push_back("t_end >= 0 is required");
    if (n1 < 8 || n2 < 8 || n1 % 2 || n2 % 2)
        bad.push_back("n1, n2 must be even and >= 8");
    if (sym_tol < 0.0) bad.push_back("sym_tol >= 0 is required");
    if (div_tol < 0.0) bad.push_back("div_tol >= 0 is required");
    if (!(omega_tol > 0.0)) bad.push_back("omega_tol > 0 is required");
    if (lattice_N < 1) bad.push_back("lattice_N >= 1 is required");
    if (taper_x2 < 0.0 || taper_x2 > 0.25) bad.push_back("taper_x2 must lie in [0, 1/4]");
    return bad;
}

void SimParams::require_valid() const {
    auto bad = validate();
    if (!bad.empty()) {
        std::string msg;
        for (const auto& b : bad) msg += (msg.empty() ? "" : "; ") + b;
        throw ValidationError(msg);
    }
}

} // namespace vssc

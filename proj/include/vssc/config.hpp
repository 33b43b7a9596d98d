#ifndef VSSC_CONFIG_HPP
#define VSSC_CONFIG_HPP

#include "vssc/params.hpp"
#include "vssc/run.hpp"

#include <string>
#include <vector>

namespace vssc {

/** Parsed run configuration: SimParams plus orchestration options.
 *
 * File format: UTF-8 lines of `key = value`, optional `[params]`, `[run]`,
 * `[injection]` section headers, `#` comments. Unknown keys are rejected.
 */
struct RunConfig {
    SimParams params;
    std::string out_dir = "out";
    double output_dt = 0.25;
    double checkpoint_dt = 2.0;
    bool strict_gate = false;
    bool clip_interpolation = true;
    bool cfl_hard = false;
    std::vector<std::string> suites;  // empty = all
    InjectionSpec injection;          // [injection] modes=k:amp,... target_c=...

    RunOptions run_options() const;
};

/** Parse from text; errors carry line/column and the violated invariant. */
RunConfig parse_config(const std::string& text);
RunConfig load_config_file(const std::string& path);

/** Canonical serialization; parse(serialize(c)) == c. */
std::string serialize_config(const RunConfig& c);

/** FNV-1a hash of the canonical serialization, hex string. */
std::string config_hash(const RunConfig& c);

extern const char* const kBuildId;

} // namespace vssc

#endif

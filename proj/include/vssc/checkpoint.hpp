#ifndef VSSC_CHECKPOINT_HPP
#define VSSC_CHECKPOINT_HPP

#include "vssc/field.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace vssc {

/** Checkpoint payload: the field plus scenario time and amplitude.
 *
 * Binary format (little-endian):
 *   magic "VSSC", version u32, grid kind u8 (0 doubled / 1 strip),
 *   n1 u32, n2 u32 (stored row count), time f64, epsilon f64,
 *   then n1*n2 f64 values row-major.
 */
struct Checkpoint {
    ScalarField field;
    double time = 0.0;
    double epsilon = 0.0;
};

void write_checkpoint(const std::string& path, const Checkpoint& ck);
Checkpoint read_checkpoint(const std::string& path);

/** Sidecar with the non-field simulation state needed for bitwise resume.
 * Binary, magic "VSSA": version u32, time f64, step u64, a f64, b f64,
 * collapsed u8, tracer count u32, (x1,x2) f64 pairs. */
struct AuxState {
    double time = 0.0;
    std::uint64_t step = 0;
    double a = 0.0;
    double b = 0.0;
    bool bracket_collapsed = false;
    std::vector<std::array<double, 2>> tracers;
};

void write_aux(const std::string& path, const AuxState& aux);
AuxState read_aux(const std::string& path);

} // namespace vssc

#endif

#include "vssc/checkpoint.hpp"

#include "vssc/errors.hpp"

#include <cstring>
#include <fstream>

namespace vssc {

namespace {

constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::ostream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& is, const std::string& path) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw CheckpointError("truncated file: " + path);
    return v;
}

} // namespace

void write_checkpoint(const std::string& path, const Checkpoint& ck) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw CheckpointError("cannot open for writing: " + path);
    os.write("VSSC", 4);
    put<std::uint32_t>(os, kVersion);
    put<std::uint8_t>(os, ck.field.grid().kind() == Domain::Strip ? 1 : 0);
    put<std::uint32_t>(os, static_cast<std::uint32_t>(ck.field.grid().n1()));
    put<std::uint32_t>(os, static_cast<std::uint32_t>(ck.field.grid().rows()));
    put<double>(os, ck.time);
    put<double>(os, ck.epsilon);
    os.write(reinterpret_cast<const char*>(ck.field.data()),
             static_cast<std::streamsize>(ck.field.grid().size() * sizeof(double)));
    if (!os) throw CheckpointError("write failed: " + path);
}

Checkpoint read_checkpoint(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw CheckpointError("cannot open: " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "VSSC", 4) != 0)
        throw CheckpointError("bad magic in " + path);
    const auto ver = get<std::uint32_t>(is, path);
    if (ver != kVersion) throw CheckpointError("unsupported version in " + path);
    const auto kind = get<std::uint8_t>(is, path);
    const auto n1 = static_cast<int>(get<std::uint32_t>(is, path));
    const auto rows = static_cast<int>(get<std::uint32_t>(is, path));
    const double time = get<double>(is, path);
    const double eps = get<double>(is, path);
    const Domain dom = kind == 1 ? Domain::Strip : Domain::DoubledTorus;
    const int n2 = dom == Domain::Strip ? 2 * (rows - 1) : rows;
    TorusGrid grid(n1, n2, dom);
    Checkpoint ck{ScalarField(grid), time, eps};
    is.read(reinterpret_cast<char*>(ck.field.data()),
            static_cast<std::streamsize>(grid.size() * sizeof(double)));
    if (!is) throw CheckpointError("truncated payload in " + path);
    return ck;
}

void write_aux(const std::string& path, const AuxState& aux) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw CheckpointError("cannot open for writing: " + path);
    os.write("VSSA", 4);
    put<std::uint32_t>(os, kVersion);
    put<double>(os, aux.time);
    put<std::uint64_t>(os, aux.step);
    put<double>(os, aux.a);
    put<double>(os, aux.b);
    put<std::uint8_t>(os, aux.bracket_collapsed ? 1 : 0);
    put<std::uint32_t>(os, static_cast<std::uint32_t>(aux.tracers.size()));
    for (const auto& t : aux.tracers) {
        put<double>(os, t[0]);
        put<double>(os, t[1]);
    }
    if (!os) throw CheckpointError("write failed: " + path);
}

AuxState read_aux(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw CheckpointError("cannot open: " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "VSSA", 4) != 0)
        throw CheckpointError("bad magic in " + path);
    if (get<std::uint32_t>(is, path) != kVersion)
        throw CheckpointError("unsupported version in " + path);
    AuxState aux;
    aux.time = get<double>(is, path);
    aux.step = get<std::uint64_t>(is, path);
    aux.a = get<double>(is, path);
    aux.b = get<double>(is, path);
    aux.bracket_collapsed = get<std::uint8_t>(is, path) != 0;
    const auto n = get<std::uint32_t>(is, path);
    aux.tracers.resize(n);
    for (auto& t : aux.tracers) {
        t[0] = get<double>(is, path);
        t[1] = get<double>(is, path);
    }
    return aux;
}

} // namespace vssc

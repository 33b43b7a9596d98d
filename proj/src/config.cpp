#include "vssc/config.hpp"

#include "vssc/csvio.hpp"
#include "vssc/errors.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace vssc {

const char* const kBuildId = "vssc-0.1.0";

RunOptions RunConfig::run_options() const {
    RunOptions o;
    o.output_dt = output_dt;
    o.checkpoint_dt = checkpoint_dt;
    o.strict_gate = strict_gate;
    o.step.clip_interpolation = clip_interpolation;
    o.step.cfl_hard = cfl_hard;
    o.injection = injection;
    return o;
}

namespace {

struct Cursor {
    int line;
    int col;
};

[[noreturn]] void fail(const Cursor& c, const std::string& what) {
    throw ParseError("line " + std::to_string(c.line) + ", column " +
                     std::to_string(c.col) + ": " + what);
}

std::string trim(const std::string& s, int line, int* col_out) {
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    if (col_out) *col_out = b == std::string::npos ? 1 : static_cast<int>(b) + 1;
    (void)line;
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

double parse_number(const std::string& v, const Cursor& c) {
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size()) fail(c, "trailing characters in number '" + v + "'");
        return x;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        fail(c, "expected a number, got '" + v + "'");
    }
}

long parse_int(const std::string& v, const Cursor& c) {
    try {
        std::size_t used = 0;
        const long x = std::stol(v, &used);
        if (used != v.size()) fail(c, "trailing characters in integer '" + v + "'");
        return x;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        fail(c, "expected an integer, got '" + v + "'");
    }
}

bool parse_bool(const std::string& v, const Cursor& c) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    fail(c, "expected a boolean, got '" + v + "'");
}

std::vector<std::pair<int, double>> parse_modes(const std::string& v, const Cursor& c) {
    std::vector<std::pair<int, double>> out;
    std::istringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int dummy;
        item = trim(item, c.line, &dummy);
        if (item.empty()) continue;
        const auto pos = item.find(':');
        if (pos == std::string::npos) fail(c, "mode entries use k:amplitude");
        out.emplace_back(static_cast<int>(parse_int(item.substr(0, pos), c)),
                         parse_number(item.substr(pos + 1), c));
    }
    return out;
}

} // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    std::string section = "params";
    while (std::getline(is, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        int col = 1;
        std::string line = trim(raw, lineno, &col);
        if (line.empty()) continue;
        Cursor cur{lineno, col};
        if (line.front() == '[') {
            if (line.back() != ']') fail(cur, "unterminated section header");
            section = line.substr(1, line.size() - 2);
            if (section != "params" && section != "run" && section != "injection")
                fail(cur, "unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(cur, "expected key = value");
        int kc = 0, vc = 0;
        const std::string key = trim(line.substr(0, eq), lineno, &kc);
        const std::string val = trim(line.substr(eq + 1), lineno, &vc);
        Cursor vcur{lineno, col + static_cast<int>(eq) + vc};
        if (key.empty()) fail(cur, "empty key");
        if (val.empty()) fail(vcur, "empty value for '" + key + "'");

        SimParams& p = cfg.params;
        bool known = true;
        if (section == "params") {
            if (key == "epsilon") p.epsilon = parse_number(val, vcur);
            else if (key == "sigma") p.sigma = parse_number(val, vcur);
            else if (key == "kappa") p.kappa = parse_number(val, vcur);
            else if (key == "delta") p.delta = parse_number(val, vcur);
            else if (key == "m") p.m = static_cast<int>(parse_int(val, vcur));
            else if (key == "dt") p.dt = parse_number(val, vcur);
            else if (key == "t_end") p.t_end = parse_number(val, vcur);
            else if (key == "n") p.n1 = p.n2 = static_cast<int>(parse_int(val, vcur));
            else if (key == "n1") p.n1 = static_cast<int>(parse_int(val, vcur));
            else if (key == "n2") p.n2 = static_cast<int>(parse_int(val, vcur));
            else if (key == "sym_tol") p.sym_tol = parse_number(val, vcur);
            else if (key == "div_tol") p.div_tol = parse_number(val, vcur);
            else if (key == "omega_tol") p.omega_tol = parse_number(val, vcur);
            else if (key == "lattice_N") p.lattice_N = static_cast<int>(parse_int(val, vcur));
            else if (key == "seed") p.seed = static_cast<std::uint64_t>(parse_int(val, vcur));
            else if (key == "taper_x2") p.taper_x2 = parse_number(val, vcur);
            else known = false;
        } else if (section == "run") {
            if (key == "out_dir") cfg.out_dir = val;
            else if (key == "output_dt") cfg.output_dt = parse_number(val, vcur);
            else if (key == "checkpoint_dt") cfg.checkpoint_dt = parse_number(val, vcur);
            else if (key == "strict_gate") cfg.strict_gate = parse_bool(val, vcur);
            else if (key == "clip_interpolation") cfg.clip_interpolation = parse_bool(val, vcur);
            else if (key == "cfl_hard") cfg.cfl_hard = parse_bool(val, vcur);
            else if (key == "suites") {
                cfg.suites.clear();
                std::istringstream ss(val);
                std::string s;
                while (std::getline(ss, s, ',')) {
                    int d;
                    s = trim(s, lineno, &d);
                    if (!s.empty()) cfg.suites.push_back(s);
                }
            } else known = false;
        } else {  // injection
            if (key == "modes") cfg.injection.modes = parse_modes(val, vcur);
            else if (key == "target_c") cfg.injection.target_c = parse_number(val, vcur);
            else known = false;
        }
        if (!known) fail(cur, "unknown key '" + key + "' in section [" + section + "]");
    }

    auto bad = cfg.params.validate();
    if (cfg.output_dt <= 0.0) bad.push_back("output_dt > 0 is required");
    if (cfg.checkpoint_dt <= 0.0) bad.push_back("checkpoint_dt > 0 is required");
    if (cfg.injection.target_c < 0.0) bad.push_back("target_c >= 0 is required");
    if (!bad.empty()) {
        std::string msg;
        for (const auto& b : bad) msg += (msg.empty() ? "" : "; ") + b;
        throw ValidationError(msg);
    }
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ParseError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& c) {
    std::ostringstream os;
    const SimParams& p = c.params;
    os << "[params]\n";
    os << "epsilon = " << format_double(p.epsilon) << "\n";
    os << "sigma = " << format_double(p.sigma) << "\n";
    os << "kappa = " << format_double(p.kappa) << "\n";
    os << "delta = " << format_double(p.delta) << "\n";
    os << "m = " << p.m << "\n";
    os << "dt = " << format_double(p.dt) << "\n";
    os << "t_end = " << format_double(p.t_end) << "\n";
    os << "n1 = " << p.n1 << "\n";
    os << "n2 = " << p.n2 << "\n";
    os << "sym_tol = " << format_double(p.sym_tol) << "\n";
    os << "div_tol = " << format_double(p.div_tol) << "\n";
    os << "omega_tol = " << format_double(p.omega_tol) << "\n";
    os << "lattice_N = " << p.lattice_N << "\n";
    os << "seed = " << p.seed << "\n";
    os << "taper_x2 = " << format_double(p.taper_x2) << "\n";
    os << "[run]\n";
    os << "out_dir = " << c.out_dir << "\n";
    os << "output_dt = " << format_double(c.output_dt) << "\n";
    os << "checkpoint_dt = " << format_double(c.checkpoint_dt) << "\n";
    os << "strict_gate = " << (c.strict_gate ? "true" : "false") << "\n";
    os << "clip_interpolation = " << (c.clip_interpolation ? "true" : "false") << "\n";
    os << "cfl_hard = " << (c.cfl_hard ? "true" : "false") << "\n";
    if (!c.suites.empty()) {
        os << "suites = ";
        for (std::size_t i = 0; i < c.suites.size(); ++i)
            os << (i ? "," : "") << c.suites[i];
        os << "\n";
    }
    os << "[injection]\n";
    if (!c.injection.modes.empty()) {
        os << "modes = ";
        for (std::size_t i = 0; i < c.injection.modes.size(); ++i)
            os << (i ? "," : "") << c.injection.modes[i].first << ":"
               << format_double(c.injection.modes[i].second);
        os << "\n";
    }
    os << "target_c = " << format_double(c.injection.target_c) << "\n";
    return os.str();
}

std::string config_hash(const RunConfig& c) {
    const std::string s = serialize_config(c);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    static const char* hex = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = hex[h & 0xf];
        h >>= 4;
    }
    buf[16] = '\0';
    return std::string(buf);
}

} // namespace vssc
